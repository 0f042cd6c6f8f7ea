#include "liftsim/lift.hpp"

#include <algorithm>

namespace liftsim {

std::vector<NodeId> extract_hub_ids(const Cache& cache, std::size_t h) {
    const std::size_t take = std::min(h, cache.size());
    std::vector<NodeId> ids(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::int32_t derive_seed(std::span<const NodeId> sorted_hub_ids) noexcept {
    std::uint32_t v = 1;
    for (NodeId id : sorted_hub_ids) v = 31u * v + static_cast<std::uint32_t>(id);
    return static_cast<std::int32_t>(v);
}

Cache random_non_hub_filler(std::span<const NodeId> hubs, std::size_t n_nodes, std::size_t count,
                            Rng& rng) {
    Cache out;
    out.reserve(count);
    auto taken = [&](NodeId id) {
        return std::find(hubs.begin(), hubs.end(), id) != hubs.end() || cache_contains(out, id);
    };
    const std::size_t available = n_nodes - std::min(n_nodes, hubs.size());
    count = std::min(count, available);
    while (out.size() < count) {
        const auto id = static_cast<NodeId>(rng.uniform(n_nodes));
        if (!taken(id)) out.push_back(id);
    }
    return out;
}

}  // namespace liftsim
