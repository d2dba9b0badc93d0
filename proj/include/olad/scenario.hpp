#ifndef OLAD_SCENARIO_HPP
#define OLAD_SCENARIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "olad/controller.hpp"
#include "olad/direct_defense.hpp"
#include "olad/latency.hpp"
#include "olad/link_flood.hpp"
#include "olad/traffic.hpp"

namespace olad {

// Scenario files and the sweep drivers behind the CLI subcommands.
//
// A scenario is a line-oriented text file with [section] headers and
// "key = value" pairs; '#' starts a comment. Unknown sections or keys are
// hard errors, reported with the offending line number. The full schema
// with every default is documented in scenarios/paper-defaults.olad.

struct SweepSpec {
    double attack_min_gbps = 0.0;
    double attack_max_gbps = 100.0;
    double attack_step_gbps = 1.0;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct LinkFloodConfig {
    double link_capacity_gbps = 10.0;
    double guaranteed_rate_mbps = 100.0;
    double legit_gbps = 10.0;
    int legit_count = 100;
    int bot_count = 10000;
    double bot_rate_mbps = 10.0;
    double tbe_duration_s = 5.0;
    int rounds_to_90 = 10;

    friend bool operator==(const LinkFloodConfig&, const LinkFloodConfig&) = default;
};

struct ControllerConfig {
    LinkId link{"ingress", "victim"};
    double headroom = 1.0;
    std::uint64_t switch_delay_us = 100;
    NetworkGraph graph;

    friend bool operator==(const ControllerConfig&, const ControllerConfig&) = default;
};

struct ScenarioConfig {
    double legit_gbps = 7.0;
    double attack_gbps = 100.0; // single-point runs; sweeps override per row
    std::vector<double> trust_fractions{0.4, 0.8};
    DirectDefenseParams direct;
    LatencyParams latency;              // .apl unused; see apl_values
    std::vector<double> apl_values{0.04, 0.24};
    double base_capacity_gbps = 10.0;   // expansion baseline for the spiffy knee
    SweepSpec sweep;
    LinkFloodConfig linkflood;
    ControllerConfig controller;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Built-in defaults (identical to scenarios/paper-defaults.olad).
ScenarioConfig default_config();

// Throws IoError when the file cannot be read, ValidationError with
// "<name>:<line>: ..." diagnostics on schema violations.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(std::string_view text, const std::string& name);

// Numeric result table; to_csv renders every cell with three fractional
// digits, '.' separator, LF newlines, header always present.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const CsvTable& table);

// One row per attack step: attack_gbps, baseline_goodput, scrubber_goodput,
// then olad_trusted/_scrubbed/_total per trust fraction.
CsvTable run_direct_sweep(const ScenarioConfig& config);

// attack_gbps, latency_baseline, latency_scrubber, latency_spiffy per APL,
// latency_olad per trust fraction (direct variant, ms).
CsvTable run_latency_sweep(const ScenarioConfig& config);

// Detection timelines for both expansion modes, sampled side by side at
// the union of their step times.
CsvTable run_linkflood(const ScenarioConfig& config);

// detect -> plan -> apply -> release against the configured graph; returns
// the serialized event log. The trusted demand uses the first configured
// trust fraction.
std::string run_controller_trace(const ScenarioConfig& config);

// Writes the four default datasets into out_dir: direct_goodput.csv,
// latency.csv, linkflood_timeline.csv, controller_trace.tsv.
void run_figures(const ScenarioConfig& config, const std::string& out_dir);

// Throws IoError on failure; creates parent directories as needed.
void write_file(const std::string& path, std::string_view content);

} // namespace olad

#endif
