#include "liftsim/rng.hpp"

namespace liftsim {

std::uint64_t substream(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RunRng::RunRng(std::uint64_t run_seed, std::size_t n_nodes)
    : run_seed_(run_seed), scheduler_(substream(run_seed, ~std::uint64_t{0})) {
    nodes_.reserve(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) nodes_.emplace_back(substream(run_seed, i));
}

}  // namespace liftsim
