#include "olad/traffic.hpp"

#include "olad/errors.hpp"
#include "olad/format.hpp"

namespace olad {

void validate(const TrafficMix& mix) {
    if (mix.legit_gbps < 0.0)
        throw ValidationError("legit demand must be >= 0, got " +
                              to_compact(mix.legit_gbps));
    if (mix.attack_gbps < 0.0)
        throw ValidationError("attack demand must be >= 0, got " +
                              to_compact(mix.attack_gbps));
    if (mix.trust_fraction < 0.0 || mix.trust_fraction > 1.0)
        throw ValidationError("trust fraction must be in [0,1], got " +
                              to_compact(mix.trust_fraction));
}

TrafficAggregates derive_quantities(const TrafficMix& mix) {
    validate(mix);
    TrafficAggregates q;
    q.trusted_gbps = mix.trust_fraction * mix.legit_gbps;
    q.susp_benign_gbps = (1.0 - mix.trust_fraction) * mix.legit_gbps;
    q.suspicious_gbps = q.susp_benign_gbps + mix.attack_gbps;
    q.total_gbps = mix.legit_gbps + mix.attack_gbps;
    return q;
}

FlowSet expand_flows(const TrafficMix& mix, int legit_count, int bot_count,
                     bool adaptive_bots) {
    validate(mix);
    if (legit_count < 0 || bot_count < 0)
        throw ValidationError("flow counts must be >= 0");
    if (mix.legit_gbps > 0.0 && legit_count == 0)
        throw ValidationError("cannot represent " + to_compact(mix.legit_gbps) +
                              " Gbps of legit demand with zero legit flows");
    if (mix.attack_gbps > 0.0 && bot_count == 0)
        throw ValidationError("cannot represent " + to_compact(mix.attack_gbps) +
                              " Gbps of attack demand with zero bot flows");

    FlowSet set;
    set.flows.reserve(static_cast<std::size_t>(legit_count) + bot_count);
    std::uint32_t next_id = 0;

    const double legit_rate_mbps =
        legit_count > 0 ? mix.legit_gbps * kMbpsPerGbps / legit_count : 0.0;
    for (int i = 0; i < legit_count; ++i)
        set.flows.push_back({next_id++, legit_rate_mbps, FlowClass::Legit,
                             /*rate_adaptive=*/true, /*detected=*/false});

    const double bot_rate_mbps =
        bot_count > 0 ? mix.attack_gbps * kMbpsPerGbps / bot_count : 0.0;
    for (int i = 0; i < bot_count; ++i)
        set.flows.push_back({next_id++, bot_rate_mbps, FlowClass::Bot,
                             adaptive_bots, /*detected=*/false});

    return set;
}

double aggregate_rate_gbps(const FlowSet& set, FlowClass cls) {
    double sum_mbps = 0.0;
    for (const Flow& f : set.flows)
        if (f.cls == cls) sum_mbps += f.rate_mbps;
    return sum_mbps / kMbpsPerGbps;
}

} // namespace olad
