#ifndef OLAD_DIRECT_DEFENSE_HPP
#define OLAD_DIRECT_DEFENSE_HPP

#include "olad/traffic.hpp"

namespace olad {

// Goodput models for a direct volumetric attack under three strategies.
// Congested links share bandwidth proportionally (all traffic is
// prioritized equally), so a pipe of capacity c loaded with total demand
// T > c delivers c * (x / T) of any component x.
//
//   baseline:  everything rides the victim link of capacity T^c.
//   scrubber:  everything is filtered by a scrubbing center of capacity
//              T^D; only benign output (malicious removal is 100%
//              effective) continues to the victim link.
//   O-LAD:     the trusted share f of benign traffic bypasses the scrubber
//              on its own wavelength; only suspicious traffic (the rest of
//              the benign demand plus the whole attack) is scrubbed.

struct DirectDefenseParams {
    double victim_capacity_gbps = 10.0;   // T^c
    double scrubber_capacity_gbps = 40.0; // T^D

    friend bool operator==(const DirectDefenseParams&,
                           const DirectDefenseParams&) = default;
};

void validate(const DirectDefenseParams& p);

// Delivered benign bandwidth, split by path. total = trusted + scrubbed,
// clamped to the victim capacity with the scrubbed share reduced first
// (trusted traffic is prioritized).
struct GoodputBreakdown {
    double trusted_gbps = 0.0;
    double scrubbed_gbps = 0.0;
    double total_gbps = 0.0;
};

double goodput_baseline(const TrafficMix& mix, const DirectDefenseParams& p);
double goodput_scrubber(const TrafficMix& mix, const DirectDefenseParams& p);
GoodputBreakdown goodput_olad(const TrafficMix& mix, const DirectDefenseParams& p);

// Goodput as a percentage of the benign demand, per strategy, and the
// O-LAD-over-scrubber gain in percentage points.
struct ImprovementPoints {
    double scrubber_pct = 0.0;
    double olad_pct = 0.0;
    double delta_points = 0.0;
};

// Rejects legit_gbps == 0 (percentages undefined).
ImprovementPoints improvement_points(const TrafficMix& mix, const DirectDefenseParams& p);

} // namespace olad

#endif
