#include "catch_amalgamated.hpp"

#include <fstream>

#include "liftsim/catalog.hpp"
#include "liftsim/config.hpp"

using namespace liftsim;

namespace {

ScenarioConfig base_cfg() {
    ScenarioConfig cfg;
    cfg.n_nodes = 1000;
    cfg.cache_size = 20;
    cfg.hub_target = 10;
    cfg.total_cycles = 1000;
    cfg.runs = 100;
    return cfg;
}

// Name of the first violated constraint, or "" when the config is valid.
std::string violated(const ScenarioConfig& cfg) {
    try {
        validate_config(cfg);
        return "";
    } catch (const ConfigError& e) {
        return e.field();
    }
}

}  // namespace

TEST_CASE("Config: reference scenario validates unchanged", "[config]") {
    ScenarioConfig cfg = base_cfg();
    cfg.attack = Attack::Coordinated;
    cfg.byzantine_fraction = 0.05;
    cfg.lift_cycle = 100;
    cfg.master_seed = 42;
    REQUIRE(violated(cfg).empty());
    REQUIRE(validate_config(cfg) == cfg);
    REQUIRE(cfg.byzantine_count() == 50);
}

TEST_CASE("Config: cache larger than network is rejected", "[config]") {
    ScenarioConfig cfg = base_cfg();
    cfg.n_nodes = 10;
    REQUIRE(violated(cfg) == "c <= N");
}

TEST_CASE("Config: hub target must stay below cache size", "[config]") {
    ScenarioConfig cfg = base_cfg();
    cfg.hub_target = 25;
    REQUIRE(violated(cfg) == "h < c");
    cfg.hub_target = 20;
    REQUIRE(violated(cfg) == "h < c");
    cfg.hub_target = 19;
    REQUIRE(violated(cfg).empty());
}

TEST_CASE("Config: first violated constraint wins", "[config]") {
    // Both h >= c and c > N; the hub check comes first.
    ScenarioConfig cfg = base_cfg();
    cfg.n_nodes = 10;
    cfg.hub_target = 30;
    REQUIRE(violated(cfg) == "h < c");
}

TEST_CASE("Config: field checks", "[config]") {
    auto with = [](auto mutate) {
        ScenarioConfig cfg = base_cfg();
        mutate(cfg);
        return violated(cfg);
    };
    CHECK(with([](auto& c) { c.n_nodes = 0; }) == "nodes");
    CHECK(with([](auto& c) { c.hub_target = 0; }) == "hubs");
    CHECK(with([](auto& c) { c.byzantine_fraction = 1.0; }) == "byzantine_fraction");
    CHECK(with([](auto& c) { c.byzantine_fraction = -0.01; }) == "byzantine_fraction");
    CHECK(with([](auto& c) {
              c.attack = Attack::Coordinated;
              c.byzantine_fraction = 0.0005;  // half a node
          }) == "byzantine_fraction");
    CHECK(with([](auto& c) { c.byzantine_fraction = 0.05; }) == "attack");
    CHECK(with([](auto& c) { c.total_cycles = 0; }) == "cycles");
    CHECK(with([](auto& c) { c.runs = 0; }) == "runs");
    CHECK(with([](auto& c) { c.hub_threshold = 0.0; }) == "hub_threshold");
    CHECK(with([](auto& c) { c.hub_threshold = 1.5; }) == "hub_threshold");
    CHECK(with([](auto& c) { c.hub_threshold = 1.0; }).empty());
}

TEST_CASE("Config: a single attacker in a thousand is integral", "[config]") {
    ScenarioConfig cfg = base_cfg();
    cfg.attack = Attack::Active;
    cfg.byzantine_fraction = 0.001;
    REQUIRE(violated(cfg).empty());
    REQUIRE(cfg.byzantine_count() == 1);
}

TEST_CASE("Config: attack names round-trip", "[config]") {
    for (Attack a : {Attack::None, Attack::Passive, Attack::Active, Attack::NonCoord,
                     Attack::Coordinated}) {
        REQUIRE(parse_attack(to_string(a)) == a);
    }
    REQUIRE_FALSE(parse_attack("sybil").has_value());
    REQUIRE(byzantine_behavior(Attack::Active) == Behavior::ActiveByzantine);
    REQUIRE(byzantine_behavior(Attack::NonCoord) == Behavior::NonCoordByzantine);
}

TEST_CASE("Config: key=value text parses every key", "[config][file]") {
    const std::string text =
        "# comment\n"
        "nodes=500\n"
        "  cache_size = 16  \n"
        "\n"
        "hubs=8\n"
        "byzantine_fraction=0.02\n"
        "attack=coordinated\n"
        "lift_cycle=50\n"
        "cycles=300\n"
        "runs=7\n"
        "seed=18446744073709551615\n"
        "hub_threshold=0.9\n";
    std::vector<std::string> seen;
    const ScenarioConfig cfg = parse_config(text, {}, &seen);
    CHECK(cfg.n_nodes == 500);
    CHECK(cfg.cache_size == 16);
    CHECK(cfg.hub_target == 8);
    CHECK(cfg.byzantine_fraction == 0.02);
    CHECK(cfg.attack == Attack::Coordinated);
    CHECK(cfg.lift_cycle == 50u);
    CHECK(cfg.total_cycles == 300);
    CHECK(cfg.runs == 7);
    CHECK(cfg.master_seed == UINT64_MAX);
    CHECK(cfg.hub_threshold == 0.9);
    CHECK(seen.size() == 10);
}

TEST_CASE("Config: lift_cycle=0 disables the redistribution", "[config][file]") {
    ScenarioConfig cfg = base_cfg();
    cfg.lift_cycle = 100;
    REQUIRE_FALSE(parse_config("lift_cycle=0\n", cfg).lift_cycle.has_value());
}

TEST_CASE("Config: malformed text names the offending key", "[config][file]") {
    auto field_of = [](const std::string& text) {
        try {
            parse_config(text, {});
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string();
    };
    CHECK(field_of("nodes=ten\n") == "nodes");
    CHECK(field_of("nodes=-4\n") == "nodes");
    CHECK(field_of("color=blue\n") == "color");
    CHECK(field_of("attack=loud\n") == "attack");
    CHECK(field_of("nodes\n") == "line 1");
}

TEST_CASE("Config: format_config parses back to the same config", "[config][file]") {
    for (const auto& entry : scenario_catalog()) {
        const ScenarioConfig back = parse_config(format_config(entry.cfg), {});
        REQUIRE(back == entry.cfg);
    }
    ScenarioConfig cfg = base_cfg();
    cfg.byzantine_fraction = 0.05;
    REQUIRE(format_config(cfg).find("byzantine_fraction=0.05\n") != std::string::npos);
}

TEST_CASE("Config: missing file raises an I/O error", "[config][file]") {
    REQUIRE_THROWS_AS(load_config_file("/nonexistent/liftsim.cfg", {}), IoError);
}

TEST_CASE("Config: file load applies on top of a base", "[config][file]") {
    const auto path = std::filesystem::temp_directory_path() / "liftsim_test_config.cfg";
    {
        std::ofstream out(path);
        out << "runs=3\nseed=9\n";
    }
    ScenarioConfig base = base_cfg();
    const ScenarioConfig cfg = load_config_file(path, base);
    std::filesystem::remove(path);
    CHECK(cfg.runs == 3);
    CHECK(cfg.master_seed == 9);
    CHECK(cfg.n_nodes == base.n_nodes);
}

TEST_CASE("Catalog: presets are valid and pinned", "[config][catalog]") {
    const auto catalog = scenario_catalog();
    REQUIRE(catalog.size() >= 9);
    for (const auto& entry : catalog) {
        INFO(entry.name);
        REQUIRE(violated(entry.cfg).empty());
        CHECK(entry.cfg.n_nodes == 1000);
        CHECK(entry.cfg.cache_size == 20);
        CHECK(entry.cfg.hub_target == 10);
        CHECK(entry.cfg.total_cycles == 1000);
        CHECK(entry.cfg.runs == 100);
        CHECK(entry.cfg.master_seed == 42);
    }
    for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8",
                             "fig9"}) {
        REQUIRE(find_preset(name).has_value());
    }
    REQUIRE_FALSE(find_preset("fig10").has_value());

    const auto fig6 = find_preset("fig6")->cfg;
    CHECK(fig6.attack == Attack::Coordinated);
    CHECK(fig6.byzantine_count() == 50);
    CHECK(fig6.lift_cycle == 100u);
}
