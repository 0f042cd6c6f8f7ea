#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "liftsim/config.hpp"

namespace liftsim {

// Named, fully pinned experiment setups (1000 nodes, c=20, h=10, 1000
// cycles, 100 runs, seed 42).
struct ScenarioCatalogEntry {
    std::string_view name;
    ScenarioConfig cfg;
    std::string_view figure;  // short description of the plotted scenario
};

std::span<const ScenarioCatalogEntry> scenario_catalog();

std::optional<ScenarioCatalogEntry> find_preset(std::string_view name);

}  // namespace liftsim
