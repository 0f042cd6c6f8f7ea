#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "liftsim/rng.hpp"
#include "liftsim/shared_prng.hpp"
#include "liftsim/types.hpp"

namespace liftsim {

// A generator every correct node can rebuild from the same seed.
template <typename G>
concept SeededDrawSource = std::constructible_from<G, std::int64_t> &&
    requires(G g, std::int32_t n) {
        { g.bounded(n) } -> std::convertible_to<std::int32_t>;
    };

static_assert(SeededDrawSource<SharedPrng>);

// Hubs as seen by one node: its first h cache entries, sorted ascending.
// Shorter caches yield every entry.
std::vector<NodeId> extract_hub_ids(const Cache& cache, std::size_t h);

// Order-sensitive 32-bit fold: v = 1; v = 31 * v + id for each id. Matches
// java.util.List#hashCode over boxed integers.
std::int32_t derive_seed(std::span<const NodeId> sorted_hub_ids) noexcept;

using LivenessQuery = std::function<bool(NodeId)>;

// Draws `h` distinct live ids from a generator seeded with `seed`, in draw
// order. Returns nullopt when fewer than h of the n_nodes ids are live.
template <SeededDrawSource G = SharedPrng>
std::optional<std::vector<NodeId>> select_new_hubs(std::int32_t seed, std::size_t n_nodes,
                                                   std::size_t h, const LivenessQuery& alive) {
    std::size_t live = 0;
    for (std::size_t id = 0; id < n_nodes && live < h; ++id) {
        if (alive(static_cast<NodeId>(id))) ++live;
    }
    if (live < h) return std::nullopt;

    G prng(static_cast<std::int64_t>(seed));
    std::vector<NodeId> hubs;
    hubs.reserve(h);
    std::vector<bool> seen(n_nodes, false);
    while (hubs.size() < h) {
        const auto id = static_cast<NodeId>(prng.bounded(static_cast<std::int32_t>(n_nodes)));
        if (seen[id]) continue;
        seen[id] = true;
        if (alive(id)) hubs.push_back(id);
    }
    return hubs;
}

// c - h distinct ids outside `hubs`, uniform over [0, n_nodes), from the
// node's own stream.
Cache random_non_hub_filler(std::span<const NodeId> hubs, std::size_t n_nodes, std::size_t count,
                            Rng& rng);

// One-shot LIFT redistribution for a correct node: the new cache is the h
// agreed hubs followed by c - h random non-hubs. Returns nullopt (the caller
// keeps the old cache) when the network has fewer than h live nodes.
template <SeededDrawSource G = SharedPrng>
std::optional<Cache> lift_redistribute(const NodeState& node, std::size_t n_nodes, std::size_t h,
                                       std::size_t c, const LivenessQuery& alive, Rng& rng) {
    const auto hub_ids = extract_hub_ids(node.cache, h);
    auto hubs = select_new_hubs<G>(derive_seed(hub_ids), n_nodes, h, alive);
    if (!hubs) return std::nullopt;
    Cache cache = std::move(*hubs);
    const Cache filler = random_non_hub_filler(cache, n_nodes, c - h, rng);
    cache.insert(cache.end(), filler.begin(), filler.end());
    return cache;
}

}  // namespace liftsim
