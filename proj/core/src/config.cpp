#include "liftsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace liftsim {

namespace {

constexpr double kIntegralSlack = 1e-6;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "'");
    }
    return value;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace

std::string_view to_string(Attack a) noexcept {
    switch (a) {
        case Attack::None: return "none";
        case Attack::Passive: return "passive";
        case Attack::Active: return "active";
        case Attack::NonCoord: return "noncoord";
        case Attack::Coordinated: return "coordinated";
    }
    return "none";
}

std::optional<Attack> parse_attack(std::string_view name) noexcept {
    for (Attack a : {Attack::None, Attack::Passive, Attack::Active, Attack::NonCoord,
                     Attack::Coordinated}) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

Behavior byzantine_behavior(Attack a) noexcept {
    switch (a) {
        case Attack::None: return Behavior::Correct;
        case Attack::Passive: return Behavior::PassiveByzantine;
        case Attack::Active: return Behavior::ActiveByzantine;
        case Attack::NonCoord: return Behavior::NonCoordByzantine;
        case Attack::Coordinated: return Behavior::CoordByzantine;
    }
    return Behavior::Correct;
}

std::size_t ScenarioConfig::byzantine_count() const noexcept {
    return static_cast<std::size_t>(std::llround(byzantine_fraction * static_cast<double>(n_nodes)));
}

ScenarioConfig validate_config(const ScenarioConfig& cfg) {
    if (cfg.n_nodes == 0) throw ConfigError("nodes", "network must have at least one node");
    if (cfg.n_nodes > static_cast<std::size_t>(INT32_MAX)) {
        throw ConfigError("nodes", "network size must fit a 31-bit identifier space");
    }
    if (cfg.hub_target == 0) throw ConfigError("hubs", "hub target must be positive");
    if (cfg.hub_target >= cfg.cache_size) {
        throw ConfigError("h < c", "hub target " + std::to_string(cfg.hub_target) +
                                       " must be smaller than cache size " +
                                       std::to_string(cfg.cache_size));
    }
    if (cfg.cache_size > cfg.n_nodes) {
        throw ConfigError("c <= N", "cache size " + std::to_string(cfg.cache_size) +
                                        " exceeds network size " + std::to_string(cfg.n_nodes));
    }
    if (!(cfg.byzantine_fraction >= 0.0 && cfg.byzantine_fraction < 1.0)) {
        throw ConfigError("byzantine_fraction", "must lie in [0, 1)");
    }
    const double scaled = cfg.byzantine_fraction * static_cast<double>(cfg.n_nodes);
    if (std::abs(scaled - std::round(scaled)) > kIntegralSlack) {
        throw ConfigError("byzantine_fraction",
                          "fraction times network size must be an integer node count");
    }
    if (cfg.byzantine_count() >= cfg.n_nodes) {
        throw ConfigError("byzantine_fraction", "at least one correct node is required");
    }
    if (cfg.attack == Attack::None && cfg.byzantine_count() != 0) {
        throw ConfigError("attack", "attack=none requires byzantine_fraction=0");
    }
    if (cfg.total_cycles == 0) throw ConfigError("cycles", "must be positive");
    if (cfg.runs == 0) throw ConfigError("runs", "must be positive");
    if (!(cfg.hub_threshold > 0.0 && cfg.hub_threshold <= 1.0)) {
        throw ConfigError("hub_threshold", "must lie in (0, 1]");
    }
    return cfg;
}

void apply_config_key(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "nodes") {
        cfg.n_nodes = parse_number<std::size_t>(key, value);
    } else if (key == "cache_size") {
        cfg.cache_size = parse_number<std::size_t>(key, value);
    } else if (key == "hubs") {
        cfg.hub_target = parse_number<std::size_t>(key, value);
    } else if (key == "byzantine_fraction") {
        cfg.byzantine_fraction = parse_number<double>(key, value);
    } else if (key == "attack") {
        auto a = parse_attack(value);
        if (!a) {
            throw ConfigError("attack", "unknown attack '" + std::string(value) +
                                            "' (none|passive|active|noncoord|coordinated)");
        }
        cfg.attack = *a;
    } else if (key == "lift_cycle") {
        const auto c = parse_number<std::uint32_t>(key, value);
        cfg.lift_cycle = c == 0 ? std::nullopt : std::optional<std::uint32_t>(c);
    } else if (key == "cycles") {
        cfg.total_cycles = parse_number<std::uint32_t>(key, value);
    } else if (key == "runs") {
        cfg.runs = parse_number<std::uint32_t>(key, value);
    } else if (key == "seed") {
        cfg.master_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "hub_threshold") {
        cfg.hub_threshold = parse_number<double>(key, value);
    } else {
        throw ConfigError(std::string(key), "unknown configuration key");
    }
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base,
                            std::vector<std::string>* seen) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no), "expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        apply_config_key(base, key, line.substr(eq + 1));
        if (seen) seen->emplace_back(key);
    }
    return base;
}

ScenarioConfig load_config_file(const std::filesystem::path& path, ScenarioConfig base,
                                std::vector<std::string>* seen) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base), seen);
}

std::string format_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "nodes=" << cfg.n_nodes << '\n'
        << "cache_size=" << cfg.cache_size << '\n'
        << "hubs=" << cfg.hub_target << '\n'
        << "byzantine_fraction=" << shortest(cfg.byzantine_fraction) << '\n'
        << "attack=" << to_string(cfg.attack) << '\n'
        << "lift_cycle=" << cfg.lift_cycle.value_or(0) << '\n'
        << "cycles=" << cfg.total_cycles << '\n'
        << "runs=" << cfg.runs << '\n'
        << "seed=" << cfg.master_seed << '\n'
        << "hub_threshold=" << shortest(cfg.hub_threshold) << '\n';
    return out.str();
}

}  // namespace liftsim
