#include "olad/link_flood.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "olad/errors.hpp"
#include "olad/format.hpp"

namespace olad {

namespace {

// ceil with a relative snap so FP noise just below an integer does not
// round an exact quotient up by one.
std::int64_t ceil_snapped(double x) {
    const double snapped = std::round(x);
    if (std::abs(x - snapped) <= 1e-9 * std::max(1.0, std::abs(x)))
        return static_cast<std::int64_t>(snapped);
    return static_cast<std::int64_t>(std::ceil(x));
}

double legit_goodput_gbps(std::span<const Flow> flows, double capacity_gbps) {
    const std::vector<double> delivered = fair_share_rates(flows, capacity_gbps);
    double sum_mbps = 0.0;
    for (std::size_t i = 0; i < flows.size(); ++i)
        if (flows[i].cls == FlowClass::Legit) sum_mbps += delivered[i];
    return sum_mbps / kMbpsPerGbps;
}

} // namespace

void validate(const LinkFloodScenario& scenario) {
    if (scenario.link_capacity_gbps <= 0.0)
        throw ValidationError("link capacity must be > 0");
    if (scenario.guaranteed_rate_mbps <= 0.0)
        throw ValidationError("guaranteed rate must be > 0");
    if (scenario.tbe_duration_s <= 0.0)
        throw ValidationError("TBE duration must be > 0");
    if (scenario.mode == ExpansionMode::MNetwork &&
        (scenario.rounds_to_90 < 5 || scenario.rounds_to_90 > 10))
        throw ValidationError("rounds_to_90 must be in [5,10], got " +
                              std::to_string(scenario.rounds_to_90));

    std::unordered_set<std::uint32_t> ids;
    for (const Flow& f : scenario.flows.flows) {
        if (f.rate_mbps < 0.0)
            throw ValidationError("flow rates must be >= 0");
        if (f.cls == FlowClass::Legit && f.detected)
            throw ValidationError("legit flows are never marked detected");
        if (!ids.insert(f.id).second)
            throw ValidationError("duplicate flow id " + std::to_string(f.id));
    }
}

std::vector<double> fair_share_rates(std::span<const Flow> flows,
                                     double link_capacity_gbps) {
    if (link_capacity_gbps <= 0.0)
        throw ValidationError("link capacity must be > 0");

    double total_mbps = 0.0;
    for (const Flow& f : flows) total_mbps += f.rate_mbps;

    std::vector<double> delivered;
    delivered.reserve(flows.size());
    const double capacity_mbps = link_capacity_gbps * kMbpsPerGbps;
    if (total_mbps <= capacity_mbps) {
        for (const Flow& f : flows) delivered.push_back(f.rate_mbps);
    } else {
        const double factor = capacity_mbps / total_mbps;
        for (const Flow& f : flows) delivered.push_back(f.rate_mbps * factor);
    }
    return delivered;
}

std::vector<double> fair_share(const LinkFloodScenario& scenario) {
    validate(scenario);
    return fair_share_rates(scenario.flows.flows, scenario.link_capacity_gbps);
}

AttackRequirement required_attack(double link_capacity_gbps,
                                  double guaranteed_rate_mbps,
                                  double reduction_factor,
                                  double bot_rate_mbps) {
    if (link_capacity_gbps <= 0.0)
        throw ValidationError("link capacity must be > 0");
    if (guaranteed_rate_mbps <= 0.0)
        throw ValidationError("guaranteed rate must be > 0");
    if (reduction_factor <= 1.0)
        throw ValidationError("reduction factor must be > 1, got " +
                              to_compact(reduction_factor));
    if (bot_rate_mbps <= 0.0)
        throw ValidationError("bot rate must be > 0");

    // With proportional sharing, cutting per-sender rates r-fold needs
    // total demand of r times the link capacity.
    AttackRequirement req;
    req.attack_volume_gbps = link_capacity_gbps * reduction_factor;
    req.bot_count =
        ceil_snapped(req.attack_volume_gbps * kMbpsPerGbps / bot_rate_mbps);
    return req;
}

DetectionTimeline simulate_detection(const LinkFloodScenario& scenario) {
    validate(scenario);

    std::int64_t bot_count = 0;
    for (const Flow& f : scenario.flows.flows) {
        if (f.cls != FlowClass::Bot) continue;
        ++bot_count;
        if (f.rate_adaptive)
            throw ValidationError(
                "rate-adaptive bots defeat rate-change detection; "
                "timeline undefined for flow " + std::to_string(f.id));
    }
    if (bot_count == 0)
        throw ValidationError("detection timeline undefined without bot flows");

    const std::int64_t rounds =
        scenario.mode == ExpansionMode::MNetwork ? scenario.rounds_to_90 : 1;

    DetectionTimeline timeline;
    timeline.mitigation_time_s = rounds * scenario.tbe_duration_s;
    timeline.steps.push_back(
        {0.0, 0.0,
         legit_goodput_gbps(scenario.flows.flows, scenario.link_capacity_gbps)});

    std::vector<Flow> residual;
    residual.reserve(scenario.flows.flows.size());
    for (std::int64_t r = 1; r <= rounds; ++r) {
        // Detection progress is linear in rounds, hitting exactly 90% at
        // the last one. Flagged bots are black-holed immediately.
        const double fraction = 0.9 * static_cast<double>(r) / rounds;
        const std::int64_t flagged =
            (9 * r * bot_count + 5 * rounds) / (10 * rounds);

        residual.clear();
        std::int64_t bots_seen = 0;
        for (const Flow& f : scenario.flows.flows) {
            if (f.cls == FlowClass::Bot && bots_seen++ < flagged)
                continue; // black-holed
            residual.push_back(f);
        }

        timeline.steps.push_back(
            {static_cast<double>(r) * scenario.tbe_duration_s, fraction,
             legit_goodput_gbps(residual, scenario.link_capacity_gbps)});
    }

    return timeline;
}

} // namespace olad
