#include "catch_amalgamated.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "liftsim/adversary.hpp"

using namespace liftsim;

TEST_CASE("Passive: empty reply, requester still recorded", "[adversary][passive]") {
    NodeState node;
    node.id = 5;
    node.cache = {1, 2, 3};
    node.behavior = Behavior::PassiveByzantine;
    Rng rng(0);
    const CacheResponse r = passive_response(node, 8, rng);
    CHECK(r.peer_cache.empty());
    CHECK_FALSE(r.backward_peer.has_value());
    CHECK(node.backward_peers == std::vector<NodeId>{8});
    passive_response(node, 9, rng);
    CHECK(node.backward_peers.size() == 2);
}

TEST_CASE("Noncoord: one slot overwritten by its own id", "[adversary][noncoord]") {
    // cache=[4,5,6], self=9: the three possible replies, each reachable.
    const std::set<Cache> expected = {{9, 5, 6}, {4, 9, 6}, {4, 5, 9}};
    std::set<Cache> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        NodeState node;
        node.id = 9;
        node.cache = {4, 5, 6};
        node.behavior = Behavior::NonCoordByzantine;
        Rng rng(seed);
        const CacheResponse r = noncoord_response(node, 1, rng);
        REQUIRE(expected.count(r.peer_cache) == 1);
        REQUIRE(r.backward_peer == 9u);
        REQUIRE(node.cache == Cache{4, 5, 6});
        seen.insert(r.peer_cache);
    }
    REQUIRE(seen == expected);
}

TEST_CASE("Noncoord: own id already cached leaves the reply unchanged", "[adversary][noncoord]") {
    NodeState node;
    node.id = 5;
    node.cache = {4, 5, 6};
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        const CacheResponse r = noncoord_response(node, 2, rng);
        REQUIRE(r.peer_cache == Cache{4, 5, 6});
    }
}

TEST_CASE("Noncoord: own id appears exactly once in every reply", "[adversary][noncoord]") {
    Rng gen(17);
    for (int trial = 0; trial < 2000; ++trial) {
        NodeState node;
        node.id = static_cast<NodeId>(gen.uniform(40));
        std::vector<NodeId> pool(40);
        std::iota(pool.begin(), pool.end(), NodeId{0});
        gen.shuffle(pool);
        node.cache.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(gen.uniform(21)));
        Rng rng(static_cast<std::uint64_t>(trial));
        const CacheResponse r = noncoord_response(node, 0, rng);
        REQUIRE(std::count(r.peer_cache.begin(), r.peer_cache.end(), node.id) == 1);
        REQUIRE(cache_is_well_formed(r.peer_cache, std::max<std::size_t>(node.cache.size(), 1)));
    }
}

TEST_CASE("Coordinated: small roster is sent whole", "[adversary][coordinated]") {
    ByzantineRoster roster({12, 3, 7});
    REQUIRE(roster.members == std::vector<NodeId>{3, 7, 12});
    NodeState node;
    node.id = 3;
    node.behavior = Behavior::CoordByzantine;
    Rng rng(0);
    for (int i = 0; i < 50; ++i) {
        const CacheResponse r = coordinated_response(node, 99, roster, 20, rng);
        auto sorted = r.peer_cache;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == std::vector<NodeId>{3, 7, 12});
        REQUIRE(roster.contains(*r.backward_peer));
    }
    REQUIRE(node.backward_peers.size() == 50);
}

TEST_CASE("Coordinated: large roster yields c distinct members", "[adversary][coordinated]") {
    std::vector<NodeId> ids;
    for (NodeId i = 0; i < 50; ++i) ids.push_back(1000 + 7 * i);
    ByzantineRoster roster(ids);
    const std::set<NodeId> members(ids.begin(), ids.end());
    NodeState node;
    node.id = ids.front();
    Rng rng(5);
    std::map<NodeId, int> appearances;
    const int draws = 1000;
    for (int i = 0; i < draws; ++i) {
        const CacheResponse r = coordinated_response(node, 1, roster, 20, rng);
        REQUIRE(r.peer_cache.size() == 20);
        REQUIRE(cache_is_well_formed(r.peer_cache, 20));
        for (NodeId id : r.peer_cache) {
            REQUIRE(members.count(id) == 1);
            ++appearances[id];
        }
        REQUIRE(members.count(*r.backward_peer) == 1);
    }
    // Each member is in a reply with probability 20/50.
    const double expect = draws * 0.4;
    const double sigma = std::sqrt(draws * 0.4 * 0.6);
    REQUIRE(appearances.size() == 50);
    for (const auto& [id, n] : appearances) {
        INFO("id " << id);
        CHECK(std::abs(n - expect) < 5 * sigma);
    }
}
