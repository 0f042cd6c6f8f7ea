#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "liftsim/lift.hpp"

using namespace liftsim;

namespace {

const LivenessQuery kAllAlive = [](NodeId) { return true; };

// Walks 0, 1, 2, ... modulo n starting from the seed. Only here to show the
// selection works with any generator that meets the concept.
struct CountingDraws {
    explicit CountingDraws(std::int64_t seed) : next(seed < 0 ? -seed : seed) {}
    std::int32_t bounded(std::int32_t n) { return static_cast<std::int32_t>(next++ % n); }
    std::int64_t next;
};
static_assert(SeededDrawSource<CountingDraws>);

std::vector<NodeId> random_sorted_subset(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    rng.shuffle_prefix(std::span<NodeId>(ids), k);
    ids.resize(k);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

TEST_CASE("derive_seed: list hash fold", "[lift][seed]") {
    CHECK(derive_seed({}) == 1);
    const std::vector<NodeId> zero = {0};
    CHECK(derive_seed(zero) == 31);
    const std::vector<NodeId> one_two = {1, 2};
    CHECK(derive_seed(one_two) == 994);
    // Values below were produced by tests/oracles/java_random.py list_hash.
    std::vector<NodeId> run(10);
    std::iota(run.begin(), run.end(), NodeId{100});
    CHECK(derive_seed(run) == -463480506);
    const std::vector<NodeId> same(10, 999);
    CHECK(derive_seed(same) == 641594145);
}

TEST_CASE("extract_hub_ids: first h, sorted", "[lift][seed]") {
    const Cache cache = {9, 3, 7, 1, 8, 2};
    CHECK(extract_hub_ids(cache, 3) == std::vector<NodeId>{3, 7, 9});
    CHECK(extract_hub_ids(cache, 10) == std::vector<NodeId>{1, 2, 3, 7, 8, 9});
    CHECK(extract_hub_ids({}, 3).empty());
}

TEST_CASE("LIFT: nodes agree whatever order their prefixes are in", "[lift][agreement]") {
    Rng gen(31337);
    constexpr std::size_t n = 1000, h = 10, c = 20;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<NodeId> hubs = random_sorted_subset(gen, n, h);
        NodeState a, b;
        a.cache = hubs;
        b.cache = hubs;
        gen.shuffle(a.cache);
        gen.shuffle(b.cache);
        // Different tails must not matter either.
        for (NodeId t = 0; t < c - h; ++t) {
            a.cache.push_back(static_cast<NodeId>(n + t));
            b.cache.push_back(static_cast<NodeId>(n + 100 + t));
        }
        const auto seed_a = derive_seed(extract_hub_ids(a.cache, h));
        const auto seed_b = derive_seed(extract_hub_ids(b.cache, h));
        REQUIRE(seed_a == seed_b);
        if (trial % 10 == 0) {
            Rng ra(1), rb(2);
            const auto ca = lift_redistribute(a, n, h, c, kAllAlive, ra);
            const auto cb = lift_redistribute(b, n, h, c, kAllAlive, rb);
            REQUIRE(ca);
            REQUIRE(cb);
            REQUIRE(std::equal(ca->begin(), ca->begin() + h, cb->begin()));
        }
    }
}

TEST_CASE("LIFT: selection is blind to identifiers", "[lift][statistics]") {
    // Seeds as they arise in practice: hashes of sorted hub prefixes.
    constexpr std::size_t n = 1000, h = 10;
    constexpr int seeds = 1000;
    Rng gen(4242);
    std::vector<int> picked(n, 0);
    for (int s = 0; s < seeds; ++s) {
        const auto prefix = random_sorted_subset(gen, n, h);
        const auto hubs = select_new_hubs(derive_seed(prefix), n, h, kAllAlive);
        REQUIRE(hubs);
        REQUIRE(std::set<NodeId>(hubs->begin(), hubs->end()).size() == h);
        for (NodeId id : *hubs) ++picked[id];
    }
    const double p = static_cast<double>(h) / n;
    const double expected = seeds * p;
    const double sigma = std::sqrt(seeds * p * (1 - p));
    for (NodeId id : {NodeId{0}, NodeId{1}, NodeId{499}, NodeId{998}, NodeId{999}}) {
        INFO("id " << id << " picked " << picked[id]);
        CHECK(std::abs(picked[id] - expected) <= 3 * sigma);
    }
    double chi2 = 0.0;
    for (int k : picked) chi2 += (k - expected) * (k - expected) / expected;
    const double dof = n - 1;
    REQUIRE(std::abs(chi2 - dof) < 5 * std::sqrt(2 * dof));
}

TEST_CASE("LIFT: h = N returns a permutation", "[lift]") {
    const auto hubs = select_new_hubs(12345, 4, 4, kAllAlive);
    REQUIRE(hubs);
    auto sorted = *hubs;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("LIFT: dead nodes are never chosen", "[lift]") {
    const LivenessQuery even_only = [](NodeId id) { return id % 2 == 0; };
    for (std::int32_t seed = -50; seed < 50; ++seed) {
        const auto hubs = select_new_hubs(seed, 100, 10, even_only);
        REQUIRE(hubs);
        for (NodeId id : *hubs) REQUIRE(id % 2 == 0);
    }
    const LivenessQuery few = [](NodeId id) { return id < 3; };
    REQUIRE_FALSE(select_new_hubs(7, 100, 4, few).has_value());
    REQUIRE(select_new_hubs(7, 100, 3, few).has_value());
}

TEST_CASE("LIFT: draw order follows the shared stream", "[lift]") {
    // Seed 0, n = 1000: the stream opens 360, 948, 29, ... with no repeats.
    const auto hubs = select_new_hubs(0, 1000, 3, kAllAlive);
    REQUIRE(hubs == std::vector<NodeId>{360, 948, 29});
}

TEST_CASE("LIFT: any conforming generator can drive the selection", "[lift]") {
    const auto hubs = select_new_hubs<CountingDraws>(5, 8, 4, kAllAlive);
    REQUIRE(hubs == std::vector<NodeId>{5, 6, 7, 0});
}

TEST_CASE("LIFT: new cache is hubs then distinct non-hubs", "[lift]") {
    NodeState node;
    node.cache = {5, 4, 3, 2, 1, 10, 11, 12};
    constexpr std::size_t n = 30, h = 5, c = 12;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto cache = lift_redistribute(node, n, h, c, kAllAlive, rng);
        REQUIRE(cache);
        REQUIRE(cache->size() == c);
        REQUIRE(cache_is_well_formed(*cache, c));
        const auto expect = select_new_hubs(derive_seed(std::vector<NodeId>{1, 2, 3, 4, 5}), n, h,
                                            kAllAlive);
        REQUIRE(std::equal(expect->begin(), expect->end(), cache->begin()));
        for (NodeId id : *cache) REQUIRE(id < n);
    }
}

TEST_CASE("LIFT: filler stops when the network has no more non-hubs", "[lift]") {
    Rng rng(0);
    const std::vector<NodeId> hubs = {0, 1, 2};
    const Cache filler = random_non_hub_filler(hubs, 5, 10, rng);
    auto sorted = filler;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == Cache{3, 4});
}
