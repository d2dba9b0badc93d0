#include "olad/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "olad/errors.hpp"
#include "olad/format.hpp"

namespace olad {

namespace {

std::string trim(std::string_view s) {
    const char* ws = " \t\r";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Parser context: carries "<file>:<line>" into every diagnostic.
struct Cursor {
    const std::string& name;
    int line;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError(name + ":" + std::to_string(line) + ": " + msg);
    }
};

double parse_double(const Cursor& at, const std::string& tok) {
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        at.fail("expected a number, got '" + tok + "'");
    return v;
}

template <typename Int>
Int parse_integer(const Cursor& at, const std::string& tok) {
    Int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        at.fail("expected an integer, got '" + tok + "'");
    return v;
}

std::vector<double> parse_list(const Cursor& at, const std::string& value) {
    std::vector<double> out;
    for (const std::string& tok : split(value, ',')) {
        if (tok.empty()) at.fail("empty entry in list '" + value + "'");
        out.push_back(parse_double(at, tok));
    }
    return out;
}

Wavelength parse_wavelength(const Cursor& at, const std::string& value) {
    const auto toks = tokens(value);
    if (toks.size() != 5)
        at.fail("wavelength needs '<id> <nodeA> <nodeB> <capacity_gbps> "
                "<role>', got '" + value + "'");
    Wavelength w;
    w.id = parse_integer<std::uint32_t>(at, toks[0]);
    w.link = LinkId(toks[1], toks[2]);
    w.capacity_gbps = parse_double(at, toks[3]);
    if (toks[4] == "active") {
        w.role = WavelengthRole::Active;
        w.state = WavelengthState::Idle;
    } else if (toks[4] == "backup") {
        w.role = WavelengthRole::Backup;
        w.state = WavelengthState::Idle;
    } else if (toks[4] == "low-priority") {
        w.role = WavelengthRole::LowPriority;
        w.state = WavelengthState::Carrying;
        w.carrying = CarriedClass::LowPriority;
    } else {
        at.fail("unknown wavelength role '" + toks[4] +
                "' (expected active, backup, or low-priority)");
    }
    return w;
}

void rebuild_nodes(ControllerConfig& controller) {
    controller.graph.nodes.clear();
    controller.graph.nodes.insert(controller.link.a);
    controller.graph.nodes.insert(controller.link.b);
    for (const Wavelength& w : controller.graph.wavelengths) {
        controller.graph.nodes.insert(w.link.a);
        controller.graph.nodes.insert(w.link.b);
    }
}

} // namespace

ScenarioConfig default_config() {
    ScenarioConfig cfg;
    cfg.controller.graph.wavelengths = {
        {1, LinkId("ingress", "victim"), 40.0, WavelengthRole::Backup,
         WavelengthState::Idle, std::nullopt},
        {2, LinkId("ingress", "victim"), 10.0, WavelengthRole::Backup,
         WavelengthState::Idle, std::nullopt},
        {3, LinkId("ingress", "victim"), 100.0, WavelengthRole::LowPriority,
         WavelengthState::Carrying, CarriedClass::LowPriority},
    };
    rebuild_nodes(cfg.controller);
    return cfg;
}

ScenarioConfig parse_config(std::string_view text, const std::string& name) {
    ScenarioConfig cfg = default_config();

    std::string section;
    std::set<std::string> seen;      // duplicate scalar keys are errors
    bool wavelengths_reset = false;  // first wavelength line drops defaults

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string line(text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const Cursor at{name, line_no};

        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') at.fail("unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known{
                "traffic", "direct", "latency", "sweep", "linkflood",
                "controller"};
            if (!known.contains(section))
                at.fail("unknown section [" + section + "]");
            continue;
        }
        if (section.empty()) at.fail("key before any [section]");

        const auto eq = line.find('=');
        if (eq == std::string::npos) at.fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) at.fail("empty key");
        if (value.empty()) at.fail("empty value for '" + key + "'");

        if (key != "wavelength" && !seen.insert(section + "." + key).second)
            at.fail("duplicate key '" + key + "' in [" + section + "]");

        if (section == "traffic") {
            if (key == "legit_gbps") cfg.legit_gbps = parse_double(at, value);
            else if (key == "attack_gbps") cfg.attack_gbps = parse_double(at, value);
            else if (key == "trust_fractions") cfg.trust_fractions = parse_list(at, value);
            else at.fail("unknown key '" + key + "' in [traffic]");
        } else if (section == "direct") {
            if (key == "victim_capacity_gbps")
                cfg.direct.victim_capacity_gbps = parse_double(at, value);
            else if (key == "scrubber_capacity_gbps")
                cfg.direct.scrubber_capacity_gbps = parse_double(at, value);
            else at.fail("unknown key '" + key + "' in [direct]");
        } else if (section == "latency") {
            if (key == "delta_ms") cfg.latency.delta_ms = parse_double(at, value);
            else if (key == "epsilon_ms") cfg.latency.epsilon_ms = parse_double(at, value);
            else if (key == "apl") cfg.apl_values = parse_list(at, value);
            else if (key == "scaling_factor")
                cfg.latency.scaling_factor = parse_double(at, value);
            else if (key == "base_capacity_gbps")
                cfg.base_capacity_gbps = parse_double(at, value);
            else at.fail("unknown key '" + key + "' in [latency]");
        } else if (section == "sweep") {
            if (key == "attack_min_gbps")
                cfg.sweep.attack_min_gbps = parse_double(at, value);
            else if (key == "attack_max_gbps")
                cfg.sweep.attack_max_gbps = parse_double(at, value);
            else if (key == "attack_step_gbps")
                cfg.sweep.attack_step_gbps = parse_double(at, value);
            else at.fail("unknown key '" + key + "' in [sweep]");
        } else if (section == "linkflood") {
            if (key == "link_capacity_gbps")
                cfg.linkflood.link_capacity_gbps = parse_double(at, value);
            else if (key == "guaranteed_rate_mbps")
                cfg.linkflood.guaranteed_rate_mbps = parse_double(at, value);
            else if (key == "legit_gbps")
                cfg.linkflood.legit_gbps = parse_double(at, value);
            else if (key == "legit_count")
                cfg.linkflood.legit_count = parse_integer<int>(at, value);
            else if (key == "bot_count")
                cfg.linkflood.bot_count = parse_integer<int>(at, value);
            else if (key == "bot_rate_mbps")
                cfg.linkflood.bot_rate_mbps = parse_double(at, value);
            else if (key == "tbe_duration_s")
                cfg.linkflood.tbe_duration_s = parse_double(at, value);
            else if (key == "rounds_to_90")
                cfg.linkflood.rounds_to_90 = parse_integer<int>(at, value);
            else at.fail("unknown key '" + key + "' in [linkflood]");
        } else if (section == "controller") {
            if (key == "link") {
                const auto toks = tokens(value);
                if (toks.size() != 2)
                    at.fail("link needs '<nodeA> <nodeB>', got '" + value + "'");
                cfg.controller.link = LinkId(toks[0], toks[1]);
            } else if (key == "headroom") {
                cfg.controller.headroom = parse_double(at, value);
            } else if (key == "switch_delay_us") {
                cfg.controller.switch_delay_us =
                    parse_integer<std::uint64_t>(at, value);
            } else if (key == "wavelength") {
                if (!wavelengths_reset) {
                    cfg.controller.graph.wavelengths.clear();
                    wavelengths_reset = true;
                }
                cfg.controller.graph.wavelengths.push_back(
                    parse_wavelength(at, value));
            } else {
                at.fail("unknown key '" + key + "' in [controller]");
            }
        }
    }

    rebuild_nodes(cfg.controller);

    // Cross-key checks; these have no single offending line.
    const auto fail = [&](const std::string& msg) {
        throw ValidationError(name + ": " + msg);
    };
    if (cfg.trust_fractions.empty()) fail("trust_fractions must not be empty");
    for (double f : cfg.trust_fractions)
        if (f < 0.0 || f > 1.0)
            fail("trust fraction " + to_compact(f) + " outside [0,1]");
    if (cfg.apl_values.empty()) fail("apl must not be empty");
    if (cfg.sweep.attack_step_gbps <= 0.0) fail("attack_step_gbps must be > 0");
    if (cfg.sweep.attack_min_gbps > cfg.sweep.attack_max_gbps)
        fail("attack_min_gbps exceeds attack_max_gbps");
    if (cfg.sweep.attack_min_gbps < 0.0) fail("attack_min_gbps must be >= 0");
    if (cfg.legit_gbps < 0.0) fail("legit_gbps must be >= 0");
    if (cfg.attack_gbps < 0.0) fail("attack_gbps must be >= 0");
    if (cfg.linkflood.legit_count < 0 || cfg.linkflood.bot_count < 0)
        fail("flow counts must be >= 0");
    if (cfg.linkflood.legit_gbps < 0.0) fail("linkflood legit_gbps must be >= 0");
    if (cfg.linkflood.bot_rate_mbps <= 0.0) fail("bot_rate_mbps must be > 0");
    if (cfg.controller.headroom < 1.0) fail("headroom must be >= 1");
    if (cfg.controller.switch_delay_us == 0) fail("switch_delay_us must be > 0");

    try {
        validate(cfg.direct);
        LatencyParams lat = cfg.latency;
        for (double apl : cfg.apl_values) {
            lat.apl = apl;
            validate(lat);
        }
        if (cfg.base_capacity_gbps <= 0.0)
            throw ValidationError("base_capacity_gbps must be > 0");
        validate(cfg.controller.graph);
    } catch (const ValidationError& e) {
        fail(e.what());
    }

    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading scenario file '" + path + "'");
    return parse_config(buf.str(), std::filesystem::path(path).filename().string());
}

std::string to_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += to_fixed3(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<double> sweep_points(const SweepSpec& sweep) {
    const auto count = static_cast<std::size_t>(
        std::max(0.0, (sweep.attack_max_gbps - sweep.attack_min_gbps) /
                              sweep.attack_step_gbps +
                          1e-9)) + 1;
    std::vector<double> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        points.push_back(sweep.attack_min_gbps +
                         static_cast<double>(i) * sweep.attack_step_gbps);
    return points;
}

} // namespace

CsvTable run_direct_sweep(const ScenarioConfig& config) {
    CsvTable table;
    table.columns = {"attack_gbps", "baseline_goodput", "scrubber_goodput"};
    for (double f : config.trust_fractions) {
        const std::string suffix = "_f" + to_compact(f);
        table.columns.push_back("olad_trusted" + suffix);
        table.columns.push_back("olad_scrubbed" + suffix);
        table.columns.push_back("olad_total" + suffix);
    }

    for (double attack : sweep_points(config.sweep)) {
        const TrafficMix base{config.legit_gbps, attack, 0.0};
        std::vector<double> row{attack, goodput_baseline(base, config.direct),
                                goodput_scrubber(base, config.direct)};
        for (double f : config.trust_fractions) {
            const TrafficMix mix{config.legit_gbps, attack, f};
            const GoodputBreakdown g = goodput_olad(mix, config.direct);
            row.push_back(g.trusted_gbps);
            row.push_back(g.scrubbed_gbps);
            row.push_back(g.total_gbps);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable run_latency_sweep(const ScenarioConfig& config) {
    CsvTable table;
    table.columns = {"attack_gbps", "latency_baseline", "latency_scrubber"};
    for (double apl : config.apl_values)
        table.columns.push_back("latency_spiffy_apl" + to_compact(apl));
    for (double f : config.trust_fractions)
        table.columns.push_back("latency_olad_f" + to_compact(f));

    for (double attack : sweep_points(config.sweep)) {
        const double total = config.legit_gbps + attack;
        std::vector<double> row{attack,
                                latency_baseline(total, config.latency),
                                latency_scrubber(total, config.latency)};
        for (double apl : config.apl_values) {
            LatencyParams p = config.latency;
            p.apl = apl;
            row.push_back(latency_spiffy(total, config.base_capacity_gbps, p));
        }
        for (double f : config.trust_fractions) {
            const TrafficMix mix{config.legit_gbps, attack, f};
            row.push_back(latency_olad(mix, config.latency,
                                       OladVariant::Direct,
                                       config.base_capacity_gbps));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable run_linkflood(const ScenarioConfig& config) {
    const LinkFloodConfig& lf = config.linkflood;
    const TrafficMix mix{lf.legit_gbps,
                         lf.bot_count * lf.bot_rate_mbps / kMbpsPerGbps, 0.0};
    LinkFloodScenario scenario;
    scenario.link_capacity_gbps = lf.link_capacity_gbps;
    scenario.guaranteed_rate_mbps = lf.guaranteed_rate_mbps;
    scenario.flows = expand_flows(mix, lf.legit_count, lf.bot_count,
                                  /*adaptive_bots=*/false);
    scenario.tbe_duration_s = lf.tbe_duration_s;
    scenario.rounds_to_90 = lf.rounds_to_90;

    scenario.mode = ExpansionMode::MNetwork;
    const DetectionTimeline mnet = simulate_detection(scenario);
    scenario.mode = ExpansionMode::MIdeal;
    const DetectionTimeline mideal = simulate_detection(scenario);

    std::vector<double> times;
    for (const TimelineStep& s : mnet.steps) times.push_back(s.time_s);
    for (const TimelineStep& s : mideal.steps) times.push_back(s.time_s);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    // Step functions: each mode holds its last value between rounds.
    const auto at_time = [](const DetectionTimeline& tl, double t) {
        const TimelineStep* last = &tl.steps.front();
        for (const TimelineStep& s : tl.steps) {
            if (s.time_s > t) break;
            last = &s;
        }
        return *last;
    };

    CsvTable table;
    table.columns = {"time_s", "mnetwork_detected_fraction",
                     "mnetwork_legit_goodput_gbps", "mideal_detected_fraction",
                     "mideal_legit_goodput_gbps"};
    for (double t : times) {
        const TimelineStep a = at_time(mnet, t);
        const TimelineStep b = at_time(mideal, t);
        table.rows.push_back({t, a.detected_fraction, a.legit_goodput_gbps,
                              b.detected_fraction, b.legit_goodput_gbps});
    }
    return table;
}

std::string run_controller_trace(const ScenarioConfig& config) {
    if (config.trust_fractions.empty())
        throw ValidationError("trust_fractions must not be empty");
    const TrafficMix mix{config.legit_gbps, config.attack_gbps,
                         config.trust_fractions.front()};

    Controller controller(config.controller.graph);
    const bool triggered = controller.detect(
        mix, config.direct.victim_capacity_gbps, config.controller.headroom);
    if (triggered) {
        const TrafficAggregates q = derive_quantities(mix);
        if (q.trusted_gbps > 0.0) {
            const AllocationPlan plan =
                controller.plan(config.controller.link, q.trusted_gbps);
            controller.apply_reconfiguration(plan,
                                             config.controller.switch_delay_us);
            controller.release();
        }
    }
    return controller.serialize_log();
}

void write_file(const std::string& path, std::string_view content) {
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

void run_figures(const ScenarioConfig& config, const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    write_file((dir / "direct_goodput.csv").string(),
               to_csv(run_direct_sweep(config)));
    write_file((dir / "latency.csv").string(),
               to_csv(run_latency_sweep(config)));
    write_file((dir / "linkflood_timeline.csv").string(),
               to_csv(run_linkflood(config)));
    write_file((dir / "controller_trace.tsv").string(),
               run_controller_trace(config));
}

} // namespace olad
