#pragma once

#include <vector>

#include "liftsim/rng.hpp"
#include "liftsim/types.hpp"

namespace liftsim {

// Every Byzantine id in the run, known to all coordinated attackers.
struct ByzantineRoster {
    std::vector<NodeId> members;  // sorted on construction; coordinated replies reorder it

    ByzantineRoster() = default;
    explicit ByzantineRoster(std::vector<NodeId> ids);

    std::size_t size() const noexcept { return members.size(); }
    bool contains(NodeId id) const noexcept;
};

// Byzantine nodes run the normal active thread; only the request handler is
// replaced. All three still record the requester in their backward list.

// Do-nothing attacker: answers with an empty cache and no backward peer.
CacheResponse passive_response(NodeState& node, NodeId requester, Rng& rng);
void passive_response(NodeState& node, NodeId requester, Rng& rng, CacheResponse& out);

// Self-promoting attacker: its own cache with one random slot overwritten by
// its own id, and itself as the backward peer. If its id is already cached
// the cache is sent unchanged.
CacheResponse noncoord_response(NodeState& node, NodeId requester, Rng& rng);
void noncoord_response(NodeState& node, NodeId requester, Rng& rng, CacheResponse& out);

// Colluding attacker: a random c-subset of the roster (the whole roster, in
// random order, when it has fewer than c members) and a random roster member
// as backward peer. The roster order is mutated.
CacheResponse coordinated_response(NodeState& node, NodeId requester, ByzantineRoster& roster,
                                   std::size_t c, Rng& rng);
void coordinated_response(NodeState& node, NodeId requester, ByzantineRoster& roster,
                          std::size_t c, Rng& rng, CacheResponse& out);

}  // namespace liftsim
