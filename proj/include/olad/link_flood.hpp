#ifndef OLAD_LINK_FLOOD_HPP
#define OLAD_LINK_FLOOD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "olad/traffic.hpp"

namespace olad {

// Link-flooding (indirect) attack simulation. Bots congest a backbone
// link; detection proceeds by temporary bandwidth expansion (TBE) rounds
// that expose fixed-rate senders. MNetwork mode needs rounds_to_90 TBE
// rounds to flag 90% of bots; MIdeal mode has enough backup capacity to
// test every suspicious flow in a single round.

enum class ExpansionMode { MNetwork, MIdeal };

struct LinkFloodScenario {
    double link_capacity_gbps = 10.0;
    double guaranteed_rate_mbps = 100.0; // per-legit-sender service target
    FlowSet flows;
    double tbe_duration_s = 5.0;
    int rounds_to_90 = 5; // TBE rounds to reach 90% detection, in [5,10]
    ExpansionMode mode = ExpansionMode::MNetwork;
};

// Throws ValidationError on nonpositive capacities/durations or, in
// MNetwork mode, rounds_to_90 outside [5,10].
void validate(const LinkFloodScenario& scenario);

struct TimelineStep {
    double time_s = 0.0;
    double detected_fraction = 0.0; // cumulative share of bots flagged
    double legit_goodput_gbps = 0.0;
};

struct DetectionTimeline {
    std::vector<TimelineStep> steps;  // starts at t = 0, strictly increasing
    double mitigation_time_s = 0.0;   // when detected_fraction reaches 0.9
};

// Proportional sharing: delivered_i = rate_i * capacity / total when the
// link is oversubscribed, the offered rate otherwise. Returns Mbps in the
// input flow order.
std::vector<double> fair_share_rates(std::span<const Flow> flows,
                                     double link_capacity_gbps);
std::vector<double> fair_share(const LinkFloodScenario& scenario);

struct AttackRequirement {
    std::int64_t bot_count = 0;
    double attack_volume_gbps = 0.0;
};

// Attack volume needed to cut legitimate sender rates by reduction_factor
// on a proportionally shared link, and the bot count at bot_rate_mbps per
// flow. Rejects reduction_factor <= 1 and nonpositive rates/capacities.
AttackRequirement required_attack(double link_capacity_gbps,
                                  double guaranteed_rate_mbps,
                                  double reduction_factor,
                                  double bot_rate_mbps);

// Round-based detection. Flagged bots are black-holed at round boundaries
// and the legit goodput is recomputed on the residual flows; the last 10%
// of bots stay undetected. Rejects scenarios with no bot flows and bots
// that mimic rate-adaptive behavior (outside the detection assumption).
DetectionTimeline simulate_detection(const LinkFloodScenario& scenario);

} // namespace olad

#endif
