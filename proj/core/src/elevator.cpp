#include "liftsim/elevator.hpp"

#include <utility>

namespace liftsim {

void record_request(NodeState& responder, NodeId requester, Rng& rng) {
    auto& backward = responder.backward_peers;
    backward.push_back(requester);
    if (backward.size() > 1) {
        std::swap(backward.front(), backward[rng.uniform(backward.size())]);
    }
}

void handle_cache_request(NodeState& responder, NodeId requester, Rng& rng, CacheResponse& out) {
    record_request(responder, requester, rng);
    out.peer_cache.assign(responder.cache.begin(), responder.cache.end());
    out.backward_peer = responder.backward_peers.front();
}

CacheResponse handle_cache_request(NodeState& responder, NodeId requester, Rng& rng) {
    CacheResponse out;
    handle_cache_request(responder, requester, rng, out);
    return out;
}

Cache elevator_step(std::span<const CacheResponse> responses, std::size_t h, std::size_t c,
                    Rng& rng, FrequencyMap& freq) {
    freq.clear();
    Cache backward_pool;
    backward_pool.reserve(responses.size());
    for (const auto& r : responses) {
        freq.add_all(r.peer_cache);
        if (r.backward_peer) backward_pool.push_back(*r.backward_peer);
    }

    Cache cache = freq.most_frequent(h);
    cache.reserve(c);
    for (NodeId id : cache) freq.remove(id);

    rng.shuffle(backward_pool);
    const std::size_t backward_limit = cache.size() + (c - h);
    for (NodeId id : backward_pool) {
        if (cache.size() >= backward_limit) break;
        if (!cache_contains(cache, id)) cache.push_back(id);
    }

    while (cache.size() < c && !freq.empty()) {
        const NodeId id = freq.take_random(rng);
        if (!cache_contains(cache, id)) cache.push_back(id);
    }
    return cache;
}

Cache elevator_step(std::span<const CacheResponse> responses, std::size_t h, std::size_t c,
                    Rng& rng) {
    FrequencyMap freq;
    return elevator_step(responses, h, c, rng, freq);
}

}  // namespace liftsim
