#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liftsim/types.hpp"

namespace liftsim {

enum class Attack : std::uint8_t { None, Passive, Active, NonCoord, Coordinated };

std::string_view to_string(Attack a) noexcept;
std::optional<Attack> parse_attack(std::string_view name) noexcept;

// Behavior assigned to the Byzantine members of a run with this attack.
Behavior byzantine_behavior(Attack a) noexcept;

struct ScenarioConfig {
    std::size_t n_nodes = 1000;
    std::size_t cache_size = 20;
    std::size_t hub_target = 10;
    double byzantine_fraction = 0.0;
    Attack attack = Attack::None;
    // Cycle at which LIFT redistribution runs; disabled when empty.
    std::optional<std::uint32_t> lift_cycle;
    std::uint32_t total_cycles = 1000;
    std::uint32_t runs = 100;
    std::uint64_t master_seed = 0;
    double hub_threshold = 0.5;

    // round(byzantine_fraction * n_nodes)
    std::size_t byzantine_count() const noexcept;

    bool operator==(const ScenarioConfig&) const = default;
};

// Thrown for any config that cannot be used. `field()` names the violated
// constraint or the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Returns cfg unchanged when every invariant holds; throws ConfigError naming
// the first violation otherwise.
ScenarioConfig validate_config(const ScenarioConfig& cfg);

// Applies `key=value` lines on top of `base`. Blank lines and lines starting
// with '#' are ignored. Unknown keys and malformed values throw ConfigError.
// The result is not validated. Keys that appeared are appended to `seen`.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {},
                            std::vector<std::string>* seen = nullptr);

// Applies a single key/value pair (same keys as the file format).
void apply_config_key(ScenarioConfig& cfg, std::string_view key, std::string_view value);

// Throws IoError when the file cannot be read.
ScenarioConfig load_config_file(const std::filesystem::path& path, ScenarioConfig base = {},
                                std::vector<std::string>* seen = nullptr);

// Renders cfg in the key=value format accepted by parse_config.
std::string format_config(const ScenarioConfig& cfg);

}  // namespace liftsim
