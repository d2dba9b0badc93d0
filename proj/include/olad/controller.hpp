#ifndef OLAD_CONTROLLER_HPP
#define OLAD_CONTROLLER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "olad/traffic.hpp"

namespace olad {

// Optical control plane. The enterprise is a multi-graph of switches
// joined by wavelengths of commodity capacities; the controller walks one
// cycle per attack:
//
//   Normal -> AttackDetected -> Reconfiguring -> Mitigating -> Restored -> Normal
//
// allocating backup (or, as a last resort, preempting low-priority)
// wavelengths for trusted traffic and releasing them afterwards. Every
// transition is stamped on a logical microsecond clock, so identical
// inputs produce byte-identical event logs.

// Commodity transceiver rates; graph validation rejects anything else.
inline constexpr double kWavelengthCapacitiesGbps[] = {1, 10, 25, 40, 80, 100};

enum class WavelengthRole { Active, Backup, LowPriority };
enum class WavelengthState { Idle, Carrying, Reconfiguring };
enum class CarriedClass { Trusted, Suspicious, LowPriority };

// Unordered endpoint pair; normalized so {a,b} == {b,a}.
struct LinkId {
    std::string a;
    std::string b;

    LinkId() = default;
    LinkId(std::string x, std::string y);

    friend bool operator==(const LinkId&, const LinkId&) = default;
};

struct Wavelength {
    std::uint32_t id = 0;
    LinkId link;
    double capacity_gbps = 0.0; // one of kWavelengthCapacitiesGbps
    WavelengthRole role = WavelengthRole::Active;
    WavelengthState state = WavelengthState::Idle;
    std::optional<CarriedClass> carrying; // set iff state == Carrying

    friend bool operator==(const Wavelength&, const Wavelength&) = default;
};

struct NetworkGraph {
    std::set<std::string> nodes;
    std::vector<Wavelength> wavelengths; // parallel channels permitted

    friend bool operator==(const NetworkGraph&, const NetworkGraph&) = default;
};

// Endpoint membership, distinct endpoints, capacity set membership, unique
// ids, and role/state consistency (backups start idle, only low-priority
// channels carry low-priority traffic).
void validate(const NetworkGraph& graph);

// True when total demand strictly exceeds headroom * victim capacity.
bool detect_trigger(const TrafficMix& mix, double victim_capacity_gbps,
                    double headroom);

struct PlannedChannel {
    std::uint32_t wavelength_id = 0;
    double capacity_gbps = 0.0;
    double assigned_gbps = 0.0; // share of the demand this channel carries
    bool preempts_low_priority = false;
};

struct AllocationPlan {
    LinkId link;
    double demand_gbps = 0.0;
    std::vector<PlannedChannel> channels;
};

// Picks backup/low-priority wavelengths on the link covering the demand.
// Low-priority channels are considered only when backups alone cannot
// cover (preemption is a last resort). Within the pool, a single covering
// channel beats any combination (smallest fitting capacity wins), else
// channels are taken greedily largest-first and redundant picks dropped.
// Equal candidates are ordered by id. Throws InsufficientCapacityError
// (with the shortfall) when the whole inventory cannot cover the demand.
AllocationPlan plan_allocation(const NetworkGraph& graph, const LinkId& link,
                               double demand_gbps);

enum class Phase { Normal, AttackDetected, Reconfiguring, Mitigating, Restored };

const char* to_string(Phase phase);

struct LogEntry {
    std::uint64_t timestamp_us = 0;
    Phase phase = Phase::Normal;
    std::string event;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

// Single-owner state machine; snapshots returned by graph()/event_log()
// are safe to copy across threads.
class Controller {
public:
    explicit Controller(NetworkGraph graph);

    // Normal phase only. Logs the observation; advances to AttackDetected
    // when the trigger fires. Returns whether it fired.
    bool detect(const TrafficMix& mix, double victim_capacity_gbps,
                double headroom);

    // Plans against the current graph; does not change state.
    AllocationPlan plan(const LinkId& link, double demand_gbps) const;

    // AttackDetected phase only. Walks each planned wavelength through
    // Reconfiguring to Carrying(Trusted), one transition per switch_delay_us
    // tick, then settles in Mitigating.
    void apply_reconfiguration(const AllocationPlan& plan,
                               std::uint64_t switch_delay_us);

    // Mitigating phase only. Returns every allocated wavelength to its
    // pre-attack role and state (preempted channels resume their
    // low-priority traffic) and settles back in Normal.
    void release();

    Phase phase() const { return phase_; }
    std::uint64_t now_us() const { return now_us_; }
    const NetworkGraph& graph() const { return graph_; }
    const std::vector<LogEntry>& event_log() const { return log_; }

    // One "timestamp_us<TAB>phase<TAB>event" line per entry, LF-terminated.
    std::string serialize_log() const;

private:
    struct Restoration {
        std::uint32_t wavelength_id;
        WavelengthRole role;
        WavelengthState state;
        std::optional<CarriedClass> carrying;
    };

    Wavelength& channel_by_id(std::uint32_t id);
    void log(const std::string& event);

    NetworkGraph graph_;
    Phase phase_ = Phase::Normal;
    std::vector<LogEntry> log_;
    std::uint64_t now_us_ = 0;
    std::uint64_t switch_delay_us_ = 0;
    std::vector<Restoration> allocated_;
};

} // namespace olad

#endif
