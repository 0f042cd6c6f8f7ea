#include "liftsim/adversary.hpp"

#include <algorithm>

#include "liftsim/elevator.hpp"

namespace liftsim {

ByzantineRoster::ByzantineRoster(std::vector<NodeId> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
}

bool ByzantineRoster::contains(NodeId id) const noexcept {
    return std::find(members.begin(), members.end(), id) != members.end();
}

void passive_response(NodeState& node, NodeId requester, Rng& rng, CacheResponse& out) {
    record_request(node, requester, rng);
    out.peer_cache.clear();
    out.backward_peer.reset();
}

CacheResponse passive_response(NodeState& node, NodeId requester, Rng& rng) {
    CacheResponse out;
    passive_response(node, requester, rng, out);
    return out;
}

void noncoord_response(NodeState& node, NodeId requester, Rng& rng, CacheResponse& out) {
    record_request(node, requester, rng);
    out.peer_cache.assign(node.cache.begin(), node.cache.end());
    if (out.peer_cache.empty()) {
        out.peer_cache.push_back(node.id);
    } else if (!cache_contains(out.peer_cache, node.id)) {
        out.peer_cache[rng.uniform(out.peer_cache.size())] = node.id;
    }
    out.backward_peer = node.id;
}

CacheResponse noncoord_response(NodeState& node, NodeId requester, Rng& rng) {
    CacheResponse out;
    noncoord_response(node, requester, rng, out);
    return out;
}

void coordinated_response(NodeState& node, NodeId requester, ByzantineRoster& roster,
                          std::size_t c, Rng& rng, CacheResponse& out) {
    record_request(node, requester, rng);
    auto& members = roster.members;
    const std::size_t take = std::min(c, members.size());
    rng.shuffle_prefix(std::span<NodeId>(members), take);
    out.peer_cache.assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take));
    if (members.empty()) {
        out.backward_peer.reset();
    } else {
        out.backward_peer = members[rng.uniform(members.size())];
    }
}

CacheResponse coordinated_response(NodeState& node, NodeId requester, ByzantineRoster& roster,
                                   std::size_t c, Rng& rng) {
    CacheResponse out;
    coordinated_response(node, requester, roster, c, rng, out);
    return out;
}

}  // namespace liftsim
