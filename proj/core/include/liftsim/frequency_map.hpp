#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liftsim/rng.hpp"
#include "liftsim/types.hpp"

namespace liftsim {

// Multiset of NodeIds gathered from neighbor caches during one active step.
//
// Dense storage indexed by NodeId so that counting, removal and uniform key
// draws are O(1). The map is meant to be reused across steps: clear() only
// touches the keys that were inserted.
class FrequencyMap {
public:
    FrequencyMap() = default;
    explicit FrequencyMap(std::size_t id_space) { reserve_ids(id_space); }

    void add(NodeId id) { add_all(std::span<const NodeId>(&id, 1)); }

    void add_all(std::span<const NodeId> ids) {
        std::size_t space = counts_.size();
        std::uint32_t* counts = counts_.data();
        std::uint32_t* slot = slot_.data();
        NodeId* keys = keys_.data();
        std::size_t n = n_keys_;
        for (NodeId id : ids) {
            if (id >= space) [[unlikely]] {
                grow_to(id);
                space = counts_.size();
                counts = counts_.data();
                slot = slot_.data();
                keys = keys_.data();
            }
            if (counts[id]++ == 0) {
                slot[id] = static_cast<std::uint32_t>(n);
                keys[n++] = id;
            }
        }
        n_keys_ = n;
    }

    // 0 when absent.
    std::uint32_t count(NodeId id) const noexcept {
        return id < counts_.size() ? counts_[id] : 0;
    }
    bool contains(NodeId id) const noexcept { return count(id) != 0; }

    std::size_t size() const noexcept { return n_keys_; }
    bool empty() const noexcept { return n_keys_ == 0; }

    // Distinct keys in unspecified (but deterministic) order.
    std::span<const NodeId> keys() const noexcept { return {keys_.data(), n_keys_}; }

    // Up to `h` keys ordered by descending count, ties by ascending id.
    std::vector<NodeId> most_frequent(std::size_t h) const;

    void remove(NodeId id) noexcept;

    // Removes and returns a key drawn uniformly over the distinct keys.
    // Precondition: !empty().
    NodeId take_random(Rng& rng);

    void clear() noexcept;

private:
    static constexpr std::uint32_t kAbsent = UINT32_MAX;

    void reserve_ids(std::size_t n);
    void grow_to(NodeId id);

    std::vector<std::uint32_t> counts_;
    std::vector<std::uint32_t> slot_;  // position in keys_, or kAbsent
    std::vector<NodeId> keys_;  // sized to the id space; first n_keys_ live
    std::size_t n_keys_ = 0;
    // scratch for most_frequent
    mutable std::vector<std::uint32_t> histogram_;
    mutable std::vector<NodeId> boundary_;
};

}  // namespace liftsim
