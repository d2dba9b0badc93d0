#ifndef OLAD_LATENCY_HPP
#define OLAD_LATENCY_HPP

#include "olad/traffic.hpp"

namespace olad {

// Closed-form latency for legitimate traffic. Each model is a propagation
// term that inflates linearly once total demand exceeds the relevant
// capacity:
//
//   baseline   delta                 knee at the victim capacity T^c
//   scrubber   delta + epsilon       knee at the scrubber capacity T^D
//   spiffy     delta * (1 + APL)     knee at M_N = scaling_factor * base
//
// The congested branch is base * (T / capacity); at T == capacity the two
// branches agree exactly (T / capacity == 1.0), so every curve is
// continuous at its knee in floating point, not just on paper.

struct LatencyParams {
    double delta_ms = 100.0;   // propagation delay, ingress to victim
    double epsilon_ms = 100.0; // extra delay through the scrubber
    double apl = 0.04;         // fractional alternate-path length increase, [0,1]
    double scaling_factor = 2.0;          // bandwidth expansion ratio, >= 1
    double victim_capacity_gbps = 10.0;   // T^c
    double scrubber_capacity_gbps = 40.0; // T^D

    friend bool operator==(const LatencyParams&, const LatencyParams&) = default;
};

void validate(const LatencyParams& p);

double latency_baseline(double total_gbps, const LatencyParams& p);
double latency_scrubber(double total_gbps, const LatencyParams& p);

// The expansion knee sits at scaling_factor * base_capacity_gbps.
double latency_spiffy(double total_gbps, double base_capacity_gbps,
                      const LatencyParams& p);

// Which defense handles the suspicious share of benign traffic.
enum class OladVariant { Direct, Indirect };

// Average over all benign traffic, weighted by the trusted/suspicious
// split: trusted flows ride an uncongested wavelength at delta, suspicious
// benign flows see the defense-path latency (scrubber for Direct, spiffy
// for Indirect). Rejects legit_gbps == 0.
double latency_olad(const TrafficMix& mix, const LatencyParams& p,
                    OladVariant variant, double base_capacity_gbps);

} // namespace olad

#endif
