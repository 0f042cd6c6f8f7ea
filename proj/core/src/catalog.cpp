#include "liftsim/catalog.hpp"

#include <array>

namespace liftsim {

namespace {

ScenarioConfig preset(Attack attack, double fraction, std::optional<std::uint32_t> lift = {}) {
    ScenarioConfig cfg;
    cfg.n_nodes = 1000;
    cfg.cache_size = 20;
    cfg.hub_target = 10;
    cfg.attack = attack;
    cfg.byzantine_fraction = fraction;
    cfg.lift_cycle = lift;
    cfg.total_cycles = 1000;
    cfg.runs = 100;
    cfg.master_seed = 42;
    cfg.hub_threshold = 0.5;
    return cfg;
}

const std::array<ScenarioCatalogEntry, 10>& catalog() {
    static const std::array<ScenarioCatalogEntry, 10> entries = {{
        {"fig1", preset(Attack::None, 0.0), "no attack: hub convergence"},
        {"fig2", preset(Attack::Active, 0.001), "single active Byzantine"},
        {"fig2b", preset(Attack::Passive, 0.001), "single passive Byzantine"},
        {"fig3", preset(Attack::Coordinated, 0.01), "coordinated Byzantines, 1%"},
        {"fig4", preset(Attack::Coordinated, 0.02), "coordinated Byzantines, 2%"},
        {"fig5", preset(Attack::Coordinated, 0.05), "coordinated Byzantines, 5%"},
        {"fig6", preset(Attack::Coordinated, 0.05, 100), "LIFT at cycle 100, 5% coordinated"},
        {"fig7", preset(Attack::Coordinated, 0.10, 100), "LIFT at cycle 100, 10% coordinated"},
        {"fig8", preset(Attack::Coordinated, 0.15, 100), "LIFT at cycle 100, 15% coordinated"},
        {"fig9", preset(Attack::NonCoord, 0.05), "non-coordinating Byzantines, 5%"},
    }};
    return entries;
}

}  // namespace

std::span<const ScenarioCatalogEntry> scenario_catalog() { return catalog(); }

std::optional<ScenarioCatalogEntry> find_preset(std::string_view name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

}  // namespace liftsim
