// Scenario front end: sweeps the closed-form attack models, runs the
// link-flood detection timelines, and traces the optical controller, all
// from one scenario file (see scenarios/paper-defaults.olad).
//
// Exit codes: 0 ok, 1 validation error, 2 model error, 3 I/O error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "olad/errors.hpp"
#include "olad/scenario.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::vector<double> trust_override;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const char* out_desc) {
    cmd->add_option("--config", opts.config_path,
                    "scenario file (built-in defaults when omitted)");
    cmd->add_option("--out", opts.out_path, out_desc)->required();
    cmd->add_option("--f", opts.trust_override,
                    "override trust fractions, e.g. --f 0.4,0.8")
        ->delimiter(',');
}

olad::ScenarioConfig make_config(const CommonOpts& opts) {
    olad::ScenarioConfig cfg = opts.config_path.empty()
                                   ? olad::default_config()
                                   : olad::load_config(opts.config_path);
    if (!opts.trust_override.empty()) {
        for (double f : opts.trust_override)
            if (f < 0.0 || f > 1.0)
                throw olad::ValidationError("--f value " + std::to_string(f) +
                                            " outside [0,1]");
        cfg.trust_fractions = opts.trust_override;
    }
    return cfg;
}

void emit(const std::string& path, const std::string& content) {
    olad::write_file(path, content);
    std::cout << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flow-level DDoS defense models with optical-layer reconfiguration"};
    app.require_subcommand(1);

    CommonOpts direct, latency, linkflood, trace, figures;
    CLI::App* cmd_direct = app.add_subcommand(
        "direct-sweep", "goodput vs attack strength for all strategies");
    add_common(cmd_direct, direct, "output CSV path");
    CLI::App* cmd_latency = app.add_subcommand(
        "latency-sweep", "latency vs attack strength for all strategies");
    add_common(cmd_latency, latency, "output CSV path");
    CLI::App* cmd_linkflood = app.add_subcommand(
        "linkflood", "detection timelines for a link-flooding attack");
    add_common(cmd_linkflood, linkflood, "output CSV path");
    CLI::App* cmd_trace = app.add_subcommand(
        "controller-trace", "detect/plan/apply/release event log");
    add_common(cmd_trace, trace, "output TSV path");
    CLI::App* cmd_figures = app.add_subcommand(
        "figures", "write the four default datasets into a directory");
    add_common(cmd_figures, figures, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_direct->parsed())
            emit(direct.out_path, olad::to_csv(olad::run_direct_sweep(
                                      make_config(direct))));
        else if (cmd_latency->parsed())
            emit(latency.out_path, olad::to_csv(olad::run_latency_sweep(
                                       make_config(latency))));
        else if (cmd_linkflood->parsed())
            emit(linkflood.out_path, olad::to_csv(olad::run_linkflood(
                                         make_config(linkflood))));
        else if (cmd_trace->parsed())
            emit(trace.out_path,
                 olad::run_controller_trace(make_config(trace)));
        else if (cmd_figures->parsed()) {
            olad::run_figures(make_config(figures), figures.out_path);
            std::cout << "wrote " << figures.out_path
                      << "/{direct_goodput.csv,latency.csv,"
                         "linkflood_timeline.csv,controller_trace.tsv}\n";
        }
    } catch (const olad::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const olad::InsufficientCapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const olad::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const olad::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
