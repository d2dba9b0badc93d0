#include "olad/controller.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "olad/errors.hpp"
#include "olad/format.hpp"

namespace olad {

namespace {

bool is_commodity_capacity(double capacity_gbps) {
    for (double c : kWavelengthCapacitiesGbps)
        if (capacity_gbps == c) return true;
    return false;
}

const char* role_name(WavelengthRole role) {
    switch (role) {
        case WavelengthRole::Active: return "active";
        case WavelengthRole::Backup: return "backup";
        case WavelengthRole::LowPriority: return "low-priority";
    }
    return "?";
}

std::string channel_label(const Wavelength& w) {
    return "wavelength " + std::to_string(w.id) + " (" + w.link.a + "<->" +
           w.link.b + ", " + to_compact(w.capacity_gbps) + " Gbps)";
}

} // namespace

LinkId::LinkId(std::string x, std::string y)
    : a(std::move(x)), b(std::move(y)) {
    if (b < a) std::swap(a, b);
}

void validate(const NetworkGraph& graph) {
    std::unordered_set<std::uint32_t> ids;
    for (const Wavelength& w : graph.wavelengths) {
        if (w.link.a == w.link.b)
            throw ValidationError("wavelength " + std::to_string(w.id) +
                                  " must join two distinct nodes");
        if (!graph.nodes.contains(w.link.a) || !graph.nodes.contains(w.link.b))
            throw ValidationError("wavelength " + std::to_string(w.id) +
                                  " references a node outside the graph");
        if (!is_commodity_capacity(w.capacity_gbps))
            throw ValidationError(
                "wavelength " + std::to_string(w.id) + " capacity " +
                to_compact(w.capacity_gbps) +
                " Gbps is not a commodity transceiver rate");
        if (!ids.insert(w.id).second)
            throw ValidationError("duplicate wavelength id " +
                                  std::to_string(w.id));
        if (w.carrying.has_value() != (w.state == WavelengthState::Carrying))
            throw ValidationError("wavelength " + std::to_string(w.id) +
                                  " carried class inconsistent with state");
        // Backups are spare capacity until the planner hands them out.
        if (w.role == WavelengthRole::Backup &&
            w.state != WavelengthState::Idle)
            throw ValidationError("backup wavelength " + std::to_string(w.id) +
                                  " must start idle");
        if (w.carrying == CarriedClass::LowPriority &&
            w.role != WavelengthRole::LowPriority)
            throw ValidationError("wavelength " + std::to_string(w.id) +
                                  " carries low-priority traffic but is not a "
                                  "low-priority channel");
    }
}

bool detect_trigger(const TrafficMix& mix, double victim_capacity_gbps,
                    double headroom) {
    validate(mix);
    if (victim_capacity_gbps <= 0.0)
        throw ValidationError("victim capacity must be > 0");
    if (headroom < 1.0)
        throw ValidationError("headroom must be >= 1");
    const double total = mix.legit_gbps + mix.attack_gbps;
    return total > headroom * victim_capacity_gbps;
}

AllocationPlan plan_allocation(const NetworkGraph& graph, const LinkId& link,
                               double demand_gbps) {
    validate(graph);
    if (demand_gbps <= 0.0)
        throw ValidationError("allocation demand must be > 0");

    std::vector<const Wavelength*> backups;
    std::vector<const Wavelength*> low_priority;
    double backup_gbps = 0.0;
    double inventory_gbps = 0.0;
    for (const Wavelength& w : graph.wavelengths) {
        if (w.link != link) continue;
        if (w.state == WavelengthState::Reconfiguring) continue;
        if (w.role == WavelengthRole::Backup) {
            backups.push_back(&w);
            backup_gbps += w.capacity_gbps;
            inventory_gbps += w.capacity_gbps;
        } else if (w.role == WavelengthRole::LowPriority) {
            low_priority.push_back(&w);
            inventory_gbps += w.capacity_gbps;
        }
    }

    if (inventory_gbps < demand_gbps)
        throw InsufficientCapacityError(
            "link " + link.a + "<->" + link.b + " inventory covers only " +
                to_compact(inventory_gbps) + " of " + to_compact(demand_gbps) +
                " Gbps demanded, shortfall " +
                to_compact(demand_gbps - inventory_gbps) + " Gbps",
            demand_gbps - inventory_gbps);

    // Preemption is a last resort: plan over backups alone whenever they
    // can cover the demand.
    const auto preference = [](const Wavelength* w) {
        return w->role == WavelengthRole::Backup ? 0 : 1;
    };
    std::vector<const Wavelength*> pool = backups;
    if (backup_gbps < demand_gbps)
        pool.insert(pool.end(), low_priority.begin(), low_priority.end());

    std::vector<const Wavelength*> selected;

    // A single covering channel beats any combination: the smallest
    // capacity that still fits, backups first, then the lowest id.
    const Wavelength* best_single = nullptr;
    for (const Wavelength* w : pool) {
        if (w->capacity_gbps < demand_gbps) continue;
        if (best_single == nullptr ||
            std::tuple(preference(w), w->capacity_gbps, w->id) <
                std::tuple(preference(best_single), best_single->capacity_gbps,
                           best_single->id))
            best_single = w;
    }
    if (best_single != nullptr) {
        selected.push_back(best_single);
    } else {
        // Greedy largest-first, backups before low-priority, then drop
        // picks made redundant by later ones.
        std::sort(pool.begin(), pool.end(),
                  [&](const Wavelength* l, const Wavelength* r) {
                      return std::tuple(preference(l), -l->capacity_gbps, l->id) <
                             std::tuple(preference(r), -r->capacity_gbps, r->id);
                  });
        double acc = 0.0;
        for (const Wavelength* w : pool) {
            selected.push_back(w);
            acc += w->capacity_gbps;
            if (acc >= demand_gbps) break;
        }
        for (std::size_t i = selected.size(); i-- > 0;) {
            if (acc - selected[i]->capacity_gbps >= demand_gbps) {
                acc -= selected[i]->capacity_gbps;
                selected.erase(selected.begin() +
                               static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    AllocationPlan plan;
    plan.link = link;
    plan.demand_gbps = demand_gbps;
    double remaining = demand_gbps;
    for (const Wavelength* w : selected) {
        PlannedChannel ch;
        ch.wavelength_id = w->id;
        ch.capacity_gbps = w->capacity_gbps;
        ch.assigned_gbps = std::min(remaining, w->capacity_gbps);
        ch.preempts_low_priority = w->role == WavelengthRole::LowPriority;
        remaining -= ch.assigned_gbps;
        plan.channels.push_back(ch);
    }
    return plan;
}

const char* to_string(Phase phase) {
    switch (phase) {
        case Phase::Normal: return "Normal";
        case Phase::AttackDetected: return "AttackDetected";
        case Phase::Reconfiguring: return "Reconfiguring";
        case Phase::Mitigating: return "Mitigating";
        case Phase::Restored: return "Restored";
    }
    return "?";
}

Controller::Controller(NetworkGraph graph) : graph_(std::move(graph)) {
    validate(graph_);
}

Wavelength& Controller::channel_by_id(std::uint32_t id) {
    for (Wavelength& w : graph_.wavelengths)
        if (w.id == id) return w;
    throw ModelError("plan references unknown wavelength " +
                     std::to_string(id));
}

void Controller::log(const std::string& event) {
    log_.push_back({now_us_, phase_, event});
}

bool Controller::detect(const TrafficMix& mix, double victim_capacity_gbps,
                        double headroom) {
    if (phase_ != Phase::Normal)
        throw ModelError(std::string("detect is only legal in Normal phase, "
                                     "controller is ") +
                         to_string(phase_));
    const bool triggered = detect_trigger(mix, victim_capacity_gbps, headroom);
    const double total = mix.legit_gbps + mix.attack_gbps;
    if (triggered) {
        phase_ = Phase::AttackDetected;
        log("attack detected: demand " + to_fixed3(total) +
            " Gbps exceeds " + to_compact(headroom) + " x " +
            to_compact(victim_capacity_gbps) + " Gbps");
    } else {
        log("no attack: demand " + to_fixed3(total) + " Gbps within " +
            to_compact(headroom) + " x " + to_compact(victim_capacity_gbps) +
            " Gbps");
    }
    return triggered;
}

AllocationPlan Controller::plan(const LinkId& link, double demand_gbps) const {
    return plan_allocation(graph_, link, demand_gbps);
}

void Controller::apply_reconfiguration(const AllocationPlan& plan,
                                       std::uint64_t switch_delay_us) {
    if (phase_ != Phase::AttackDetected)
        throw ModelError(std::string("reconfiguration is only legal after "
                                     "detection, controller is ") +
                         to_string(phase_));
    if (switch_delay_us == 0)
        throw ValidationError("switch delay must be > 0");

    switch_delay_us_ = switch_delay_us;
    phase_ = Phase::Reconfiguring;
    for (const PlannedChannel& ch : plan.channels) {
        Wavelength& w = channel_by_id(ch.wavelength_id);
        allocated_.push_back({w.id, w.role, w.state, w.carrying});

        now_us_ += switch_delay_us_;
        const bool displacing = w.carrying == CarriedClass::LowPriority;
        w.state = WavelengthState::Reconfiguring;
        w.carrying.reset();
        log(channel_label(w) + ": " + role_name(allocated_.back().role) +
            " -> reconfiguring" +
            (displacing ? " (displacing low-priority traffic)" : ""));

        now_us_ += switch_delay_us_;
        w.state = WavelengthState::Carrying;
        w.carrying = CarriedClass::Trusted;
        log(channel_label(w) + ": carrying trusted traffic, " +
            to_fixed3(ch.assigned_gbps) + " Gbps assigned");
    }
    phase_ = Phase::Mitigating;
}

void Controller::release() {
    if (phase_ != Phase::Mitigating)
        throw ModelError(std::string("release is only legal while mitigating, "
                                     "controller is ") +
                         to_string(phase_));

    phase_ = Phase::Restored;
    for (const Restoration& prior : allocated_) {
        Wavelength& w = channel_by_id(prior.wavelength_id);
        now_us_ += switch_delay_us_;
        w.role = prior.role;
        w.state = prior.state;
        w.carrying = prior.carrying;
        log(channel_label(w) + ": released, " +
            (prior.carrying == CarriedClass::LowPriority
                 ? std::string("resuming low-priority traffic")
                 : std::string(role_name(prior.role)) + " idle again"));
    }
    allocated_.clear();
    phase_ = Phase::Normal;
    log("mitigation complete, configuration restored");
}

std::string Controller::serialize_log() const {
    std::string out;
    for (const LogEntry& e : log_) {
        out += std::to_string(e.timestamp_us);
        out += '\t';
        out += to_string(e.phase);
        out += '\t';
        out += e.event;
        out += '\n';
    }
    return out;
}

} // namespace olad
