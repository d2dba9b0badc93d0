#ifndef OLAD_TRAFFIC_HPP
#define OLAD_TRAFFIC_HPP

#include <cstdint>
#include <vector>

namespace olad {

// Traffic-class algebra. Every flow is either suspicious (S) or trusted
// (not-S); attack traffic A is a subset of S; benign traffic is
// (S - A) u not-S. Aggregates are held in Gbps, per-flow rates in Mbps.

constexpr double kMbpsPerGbps = 1000.0;

// Aggregate demand of benign and attack traffic plus the fraction of the
// benign demand classified trusted. Immutable scenario input.
struct TrafficMix {
    double legit_gbps = 0.0;    // aggregate benign demand (B)
    double attack_gbps = 0.0;   // aggregate attack demand (A)
    double trust_fraction = 0.0; // f in [0,1]: share of benign traffic in not-S
};

// Derived aggregates. trusted + susp_benign + attack == total exactly.
struct TrafficAggregates {
    double trusted_gbps = 0.0;     // T^notS = f * legit
    double susp_benign_gbps = 0.0; // T^(S-A) = (1-f) * legit
    double suspicious_gbps = 0.0;  // T^S = T^(S-A) + attack
    double total_gbps = 0.0;       // T = legit + attack
};

enum class FlowClass { Bot, Legit };

struct Flow {
    std::uint32_t id = 0;
    double rate_mbps = 0.0;
    FlowClass cls = FlowClass::Legit;
    bool rate_adaptive = false; // sender speeds up when spare bandwidth appears
    bool detected = false;      // flagged by the defense; never set on Legit flows

    friend bool operator==(const Flow&, const Flow&) = default;
};

struct FlowSet {
    std::vector<Flow> flows;
};

// Throws ValidationError on negative demands or trust_fraction outside [0,1].
void validate(const TrafficMix& mix);

TrafficAggregates derive_quantities(const TrafficMix& mix);

// Splits the aggregate mix evenly into legit_count Legit flows (always
// rate-adaptive) and bot_count Bot flows. Rejects a zero count paired with
// nonzero demand. Legit flows get ids 0..legit_count-1, bots follow.
FlowSet expand_flows(const TrafficMix& mix, int legit_count, int bot_count,
                     bool adaptive_bots);

// Sum of flow rates for one class, converted back to Gbps.
double aggregate_rate_gbps(const FlowSet& set, FlowClass cls);

} // namespace olad

#endif
