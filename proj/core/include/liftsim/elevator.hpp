#pragma once

#include <span>

#include "liftsim/frequency_map.hpp"
#include "liftsim/rng.hpp"
#include "liftsim/types.hpp"

namespace liftsim {

// Bookkeeping every responder performs on a cache request, honest or not:
// append the requester to the backward list and reshuffle it.
//
// Only the head of the backward list is ever read, and the list is reshuffled
// before every read, so the shuffle is realized as a single Fisher-Yates step
// that moves a uniformly chosen entry to the front. The head has exactly the
// distribution of a full shuffle and the list stays a permutation of its
// entries.
void record_request(NodeState& responder, NodeId requester, Rng& rng);

// Background thread of a correct node.
CacheResponse handle_cache_request(NodeState& responder, NodeId requester, Rng& rng);
void handle_cache_request(NodeState& responder, NodeId requester, Rng& rng, CacheResponse& out);

// Active thread of the Elevator protocol. Builds a node's next cache from the
// replies of every peer in its current cache.
//
//   1. count every id across all reply caches;
//   2. take the h most frequent (count desc, id asc) as the cache prefix;
//   3. append up to c-h of the shuffled reply backward peers;
//   4. top up with distinct keys drawn uniformly from what is left of the
//      count map until c entries or the map runs dry.
//
// Never emits duplicates. The result is shorter than c only when the replies
// did not carry enough distinct ids.
Cache elevator_step(std::span<const CacheResponse> responses, std::size_t h, std::size_t c,
                    Rng& rng, FrequencyMap& scratch);

Cache elevator_step(std::span<const CacheResponse> responses, std::size_t h, std::size_t c,
                    Rng& rng);

}  // namespace liftsim
