#include "liftsim/types.hpp"

#include <algorithm>

namespace liftsim {

std::string_view to_string(Behavior b) noexcept {
    switch (b) {
        case Behavior::Correct: return "correct";
        case Behavior::PassiveByzantine: return "passive";
        case Behavior::ActiveByzantine: return "active";
        case Behavior::NonCoordByzantine: return "noncoord";
        case Behavior::CoordByzantine: return "coordinated";
    }
    return "unknown";
}

bool cache_contains(const Cache& cache, NodeId id) noexcept {
    return std::find(cache.begin(), cache.end(), id) != cache.end();
}

bool cache_is_well_formed(const Cache& cache, std::size_t capacity) {
    if (cache.size() > capacity) return false;
    Cache sorted = cache;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace liftsim
