#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace liftsim {

// Node identities are the integers [0, N). They are assigned once when the
// network is built and never change.
using NodeId = std::uint32_t;

// Ordered partial view of the network. Bounded by the cache size and free of
// duplicates; a node may list itself.
using Cache = std::vector<NodeId>;

enum class Behavior : std::uint8_t {
    Correct,
    PassiveByzantine,
    ActiveByzantine,
    NonCoordByzantine,
    CoordByzantine,
};

constexpr bool is_byzantine(Behavior b) noexcept { return b != Behavior::Correct; }

std::string_view to_string(Behavior b) noexcept;

struct NodeState {
    NodeId id = 0;
    Cache cache;
    // Every requester is appended, repeats included. Unbounded.
    std::vector<NodeId> backward_peers;
    Behavior behavior = Behavior::Correct;
    bool alive = true;
};

// Reply to a cache request.
struct CacheResponse {
    Cache peer_cache;
    std::optional<NodeId> backward_peer;
};

// True when the cache holds at most `capacity` entries and no id twice.
bool cache_is_well_formed(const Cache& cache, std::size_t capacity);

bool cache_contains(const Cache& cache, NodeId id) noexcept;

}  // namespace liftsim
