#include "olad/direct_defense.hpp"

#include <algorithm>

#include "olad/errors.hpp"

namespace olad {

void validate(const DirectDefenseParams& p) {
    if (p.victim_capacity_gbps <= 0.0)
        throw ValidationError("victim capacity must be > 0");
    if (p.scrubber_capacity_gbps <= 0.0)
        throw ValidationError("scrubber capacity must be > 0");
}

double goodput_baseline(const TrafficMix& mix, const DirectDefenseParams& p) {
    validate(mix);
    validate(p);
    const double total = mix.legit_gbps + mix.attack_gbps;
    if (total <= p.victim_capacity_gbps) return mix.legit_gbps;
    return p.victim_capacity_gbps * (mix.legit_gbps / total);
}

double goodput_scrubber(const TrafficMix& mix, const DirectDefenseParams& p) {
    validate(mix);
    validate(p);
    const double total = mix.legit_gbps + mix.attack_gbps;
    // 100% of the attack is removed; benign output still shares the
    // scrubber's ingress capacity with it.
    const double benign_out =
        total <= p.scrubber_capacity_gbps
            ? mix.legit_gbps
            : p.scrubber_capacity_gbps * (mix.legit_gbps / total);
    return std::min(benign_out, p.victim_capacity_gbps);
}

GoodputBreakdown goodput_olad(const TrafficMix& mix, const DirectDefenseParams& p) {
    validate(mix);
    validate(p);
    const TrafficAggregates q = derive_quantities(mix);

    GoodputBreakdown g;
    g.trusted_gbps = std::min(q.trusted_gbps, p.victim_capacity_gbps);

    const double scrub_in = q.susp_benign_gbps + mix.attack_gbps;
    if (scrub_in <= p.scrubber_capacity_gbps) {
        // Scrubber passes the whole benign share; the flat region is the
        // exact legit demand, not the rounded sum of its two parts.
        g.total_gbps = std::min(mix.legit_gbps, p.victim_capacity_gbps);
        g.scrubbed_gbps = g.total_gbps - g.trusted_gbps;
    } else {
        const double scrub_out =
            p.scrubber_capacity_gbps * (q.susp_benign_gbps / scrub_in);
        g.scrubbed_gbps =
            std::min(scrub_out, p.victim_capacity_gbps - g.trusted_gbps);
        g.total_gbps =
            std::min(g.trusted_gbps + g.scrubbed_gbps, mix.legit_gbps);
    }
    return g;
}

ImprovementPoints improvement_points(const TrafficMix& mix,
                                     const DirectDefenseParams& p) {
    validate(mix);
    validate(p);
    if (mix.legit_gbps <= 0.0)
        throw ValidationError(
            "improvement undefined without legit demand to deliver");

    ImprovementPoints r;
    r.scrubber_pct = 100.0 * goodput_scrubber(mix, p) / mix.legit_gbps;
    r.olad_pct = 100.0 * goodput_olad(mix, p).total_gbps / mix.legit_gbps;
    r.delta_points = r.olad_pct - r.scrubber_pct;
    return r;
}

} // namespace olad
