#include "olad/latency.hpp"

#include "olad/errors.hpp"

namespace olad {

namespace {

// Shared branch form. t / capacity == 1.0 exactly at the knee, so the
// congested branch meets the flat branch without a jump.
double kneed(double base, double t, double capacity) {
    if (t <= capacity) return base;
    return base * (t / capacity);
}

} // namespace

void validate(const LatencyParams& p) {
    if (p.delta_ms <= 0.0)
        throw ValidationError("propagation delay must be > 0");
    if (p.epsilon_ms < 0.0)
        throw ValidationError("scrubber delay must be >= 0");
    if (p.apl < 0.0 || p.apl > 1.0)
        throw ValidationError("alternate-path length factor must be in [0,1]");
    if (p.scaling_factor < 1.0)
        throw ValidationError("bandwidth scaling factor must be >= 1");
    if (p.victim_capacity_gbps <= 0.0 || p.scrubber_capacity_gbps <= 0.0)
        throw ValidationError("capacities must be > 0");
}

double latency_baseline(double total_gbps, const LatencyParams& p) {
    validate(p);
    if (total_gbps < 0.0) throw ValidationError("demand must be >= 0");
    return kneed(p.delta_ms, total_gbps, p.victim_capacity_gbps);
}

double latency_scrubber(double total_gbps, const LatencyParams& p) {
    validate(p);
    if (total_gbps < 0.0) throw ValidationError("demand must be >= 0");
    return kneed(p.delta_ms + p.epsilon_ms, total_gbps,
                 p.scrubber_capacity_gbps);
}

double latency_spiffy(double total_gbps, double base_capacity_gbps,
                      const LatencyParams& p) {
    validate(p);
    if (total_gbps < 0.0) throw ValidationError("demand must be >= 0");
    if (base_capacity_gbps <= 0.0)
        throw ValidationError("base capacity must be > 0");
    const double expanded = p.scaling_factor * base_capacity_gbps;
    return kneed(p.delta_ms + p.delta_ms * p.apl, total_gbps, expanded);
}

double latency_olad(const TrafficMix& mix, const LatencyParams& p,
                    OladVariant variant, double base_capacity_gbps) {
    validate(mix);
    validate(p);
    if (mix.legit_gbps <= 0.0)
        throw ValidationError(
            "weighted latency undefined without legit demand");

    const TrafficAggregates q = derive_quantities(mix);
    // Trusted flows ride their own wavelength, which stays below capacity
    // in every modeled scenario, so their latency is the flat delta.
    const double trusted_latency = p.delta_ms;
    const double defense_latency =
        variant == OladVariant::Direct
            ? latency_scrubber(q.total_gbps, p)
            : latency_spiffy(q.total_gbps, base_capacity_gbps, p);

    return (trusted_latency * q.trusted_gbps +
            defense_latency * q.susp_benign_gbps) /
           (q.trusted_gbps + q.susp_benign_gbps);
}

} // namespace olad
