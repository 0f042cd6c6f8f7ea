// liftsim: run Elevator/LIFT scenarios and write per-run and aggregated CSVs.
//
//   liftsim run --preset fig6 --out results/
//   liftsim run --nodes 1000 --cache 20 --hubs 10 --attack coordinated \
//       --byzantine-fraction 0.05 --lift-cycle 100 --cycles 1000 --runs 100 \
//       --seed 42 --out results/
//   liftsim sweep --preset fig4 --fractions 0.01,0.02,0.05 --out sweep/
//
// Exit codes: 0 success, 2 config or usage error, 3 I/O error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liftsim/catalog.hpp"
#include "liftsim/config.hpp"
#include "liftsim/csv.hpp"
#include "liftsim/engine.hpp"
#include "liftsim/metrics.hpp"

namespace fs = std::filesystem;
using namespace liftsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

// Every scenario flag is optional so that presence can be told apart from a
// default; each maps to a config-file key.
struct ScenarioFlags {
    std::string config_path;
    std::string preset;
    std::map<std::string, std::string> values;  // config key -> text
    unsigned workers = 0;
    std::string out_dir;
};

void add_scenario_flags(CLI::App& cmd, ScenarioFlags& flags) {
    cmd.add_option("--config", flags.config_path, "key=value scenario file");
    cmd.add_option("--preset", flags.preset, "named scenario (see `liftsim presets`)");
    const std::pair<const char*, const char*> keyed[] = {
        {"--nodes", "nodes"},
        {"--cache", "cache_size"},
        {"--hubs", "hubs"},
        {"--attack", "attack"},
        {"--byzantine-fraction", "byzantine_fraction"},
        {"--lift-cycle", "lift_cycle"},
        {"--cycles", "cycles"},
        {"--runs", "runs"},
        {"--seed", "seed"},
        {"--hub-threshold", "hub_threshold"},
    };
    for (const auto& [flag, key] : keyed) {
        std::string k = key;
        cmd.add_option_function<std::string>(
            flag, [&flags, k](const std::string& v) { flags.values[k] = v; },
            std::string("overrides config key ") + key);
    }
    cmd.add_option("--workers", flags.workers, "parallel runs (0 = all cores)");
    cmd.add_option("--out", flags.out_dir, "output directory")->required();
}

// preset < config file < flags. Without a preset or a config file the
// network shape, run length and seed must all be given.
ScenarioConfig resolve_config(const ScenarioFlags& flags) {
    ScenarioConfig cfg;
    std::vector<std::string> seen;
    if (!flags.preset.empty()) {
        auto entry = find_preset(flags.preset);
        if (!entry) throw ConfigError("preset", "unknown preset '" + flags.preset + "'");
        cfg = entry->cfg;
        seen = {"nodes", "cache_size", "hubs", "cycles", "runs", "seed"};
    }
    if (!flags.config_path.empty()) cfg = load_config_file(flags.config_path, cfg, &seen);
    for (const auto& [key, value] : flags.values) {
        apply_config_key(cfg, key, value);
        seen.push_back(key);
    }
    for (const char* key : {"nodes", "cache_size", "hubs", "cycles", "runs", "seed"}) {
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            throw ConfigError(key, "missing; pass it as a flag, in --config, or use --preset");
        }
    }
    return validate_config(cfg);
}

EngineOptions engine_options(const ScenarioFlags& flags) {
    EngineOptions opts;
    opts.workers = flags.workers;
    return opts;
}

std::vector<CycleRecord> flatten(std::vector<RunResult>& runs, RunLog& log) {
    std::vector<CycleRecord> all;
    for (auto& r : runs) {
        log += r.log;
        std::move(r.records.begin(), r.records.end(), std::back_inserter(all));
    }
    return all;
}

std::string stat_text(const SummaryStats& s) {
    std::ostringstream out;
    out << format_double(s.mean);
    if (s.ci95) out << " +/- " << format_double(*s.ci95);
    return out.str();
}

void report_log(const RunLog& log) {
    if (log.short_hub_prefixes) {
        std::cerr << "note: LIFT read " << log.short_hub_prefixes << " caches shorter than h\n";
    }
    if (log.lift_aborts) std::cerr << "note: " << log.lift_aborts << " LIFT redistributions aborted\n";
    if (log.hub_overcount_cycles) {
        std::cerr << "note: " << log.hub_overcount_cycles << " cycles detected more than h hubs\n";
    }
}

struct ScenarioOutput {
    std::vector<CycleRecord> records;
    std::vector<AggregateRow> aggregate;
    RunLog log;
};

ScenarioOutput run_and_write(const ScenarioConfig& cfg, const EngineOptions& opts,
                             const fs::path& dir, bool write_raw) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    auto runs = run_scenario(cfg, opts);
    ScenarioOutput out;
    out.records = flatten(runs, out.log);
    out.aggregate = aggregate(out.records);

    write_file(dir / "config.txt", format_config(cfg));
    if (write_raw) {
        std::ostringstream raw;
        write_raw_csv(raw, out.records);
        write_file(dir / "raw.csv", raw.str());
    }
    std::ostringstream agg;
    write_aggregate_csv(agg, out.aggregate);
    write_file(dir / "agg.csv", agg.str());
    return out;
}

int cmd_run(const ScenarioFlags& flags) {
    const ScenarioConfig cfg = resolve_config(flags);
    const auto out = run_and_write(cfg, engine_options(flags), flags.out_dir, true);
    const std::uint32_t last = cfg.total_cycles - 1;
    std::cout << "final cycle " << last << " over " << cfg.runs << " runs:"
              << " total_hubs=" << stat_text(cycle_stats(out.records, last, Metric::TotalHubs))
              << " byzantine_hubs=" << stat_text(cycle_stats(out.records, last, Metric::ByzantineHubs))
              << " correct_hubs=" << stat_text(cycle_stats(out.records, last, Metric::CorrectHubs))
              << '\n';
    report_log(out.log);
    return kExitOk;
}

int cmd_sweep(const ScenarioFlags& flags, const std::vector<double>& fractions) {
    if (fractions.empty()) throw ConfigError("fractions", "at least one fraction is required");
    const ScenarioConfig base = resolve_config(flags);
    const fs::path root = flags.out_dir;

    // Validate every point before spending time on any of them.
    std::vector<ScenarioConfig> points;
    for (double f : fractions) {
        ScenarioConfig cfg = base;
        cfg.byzantine_fraction = f;
        points.push_back(validate_config(cfg));
    }

    std::ostringstream summary;
    summary << "fraction,final_byzantine_hubs_mean,final_byzantine_hubs_ci95,"
               "final_total_hubs_mean,runs\n";
    for (const auto& cfg : points) {
        const fs::path dir = root / ("fraction_" + format_double(cfg.byzantine_fraction));
        const auto out = run_and_write(cfg, engine_options(flags), dir, false);
        const std::uint32_t last = cfg.total_cycles - 1;
        const auto byz = cycle_stats(out.records, last, Metric::ByzantineHubs);
        const auto total = cycle_stats(out.records, last, Metric::TotalHubs);
        summary << format_double(cfg.byzantine_fraction) << ',' << format_double(byz.mean) << ','
                << (byz.ci95 ? format_double(*byz.ci95) : std::string()) << ','
                << format_double(total.mean) << ',' << byz.n << '\n';
        std::cout << "fraction " << format_double(cfg.byzantine_fraction)
                  << ": final byzantine_hubs=" << stat_text(byz)
                  << " total_hubs=" << stat_text(total) << '\n';
        report_log(out.log);
    }
    write_file(root / "summary.csv", summary.str());
    return kExitOk;
}

int cmd_presets() {
    for (const auto& e : scenario_catalog()) {
        std::cout << e.name << "\t" << e.figure << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elevator hub sampling under Byzantine attack, with LIFT redistribution"};
    app.require_subcommand(1);

    ScenarioFlags run_flags;
    auto* run = app.add_subcommand("run", "run one scenario");
    add_scenario_flags(*run, run_flags);

    ScenarioFlags sweep_flags;
    std::vector<double> fractions;
    auto* sweep = app.add_subcommand("sweep", "run one scenario per Byzantine fraction");
    add_scenario_flags(*sweep, sweep_flags);
    sweep->add_option("--fractions", fractions, "comma separated Byzantine fractions")
        ->delimiter(',')
        ->required();

    auto* presets = app.add_subcommand("presets", "list named scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) return cmd_run(run_flags);
        if (*sweep) return cmd_sweep(sweep_flags, fractions);
        if (*presets) return cmd_presets();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitConfig;
}
