#include <benchmark/benchmark.h>

#include <numeric>

#include "liftsim/catalog.hpp"
#include "liftsim/elevator.hpp"
#include "liftsim/engine.hpp"
#include "liftsim/lift.hpp"
#include "liftsim/metrics.hpp"
#include "liftsim/shared_prng.hpp"

using namespace liftsim;

namespace {

// 20 replies shaped like a converged network: 10 shared hubs then 10
// random ids out of 1000.
std::vector<CacheResponse> converged_replies(Rng& rng) {
    std::vector<CacheResponse> out(20);
    for (auto& r : out) {
        for (NodeId hub = 0; hub < 10; ++hub) r.peer_cache.push_back(hub);
        while (r.peer_cache.size() < 20) {
            const auto id = static_cast<NodeId>(10 + rng.uniform(990));
            if (!cache_contains(r.peer_cache, id)) r.peer_cache.push_back(id);
        }
        r.backward_peer = static_cast<NodeId>(rng.uniform(1000));
    }
    return out;
}

void BM_ElevatorStep(benchmark::State& state) {
    Rng rng(1);
    const auto replies = converged_replies(rng);
    FrequencyMap scratch(1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(elevator_step(replies, 10, 20, rng, scratch));
    }
}
BENCHMARK(BM_ElevatorStep);

void BM_MostFrequent(benchmark::State& state) {
    Rng rng(2);
    const auto replies = converged_replies(rng);
    FrequencyMap m(1000);
    for (const auto& r : replies) m.add_all(r.peer_cache);
    for (auto _ : state) benchmark::DoNotOptimize(m.most_frequent(10));
}
BENCHMARK(BM_MostFrequent);

// Whole cycles at the reference size, starting from a fresh k-out network.
void BM_Cycle(benchmark::State& state) {
    ScenarioConfig cfg = find_preset(state.range(0) ? "fig5" : "fig1")->cfg;
    RunRng rng(run_seed(cfg.master_seed, 0), cfg.n_nodes);
    Network net = init_kout(cfg, rng);
    CycleRunner runner(cfg);
    for (auto _ : state) runner.run_cycle(net, rng);
    state.SetLabel(state.range(0) ? "coordinated 5%" : "clean");
}
BENCHMARK(BM_Cycle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DetectHubs(benchmark::State& state) {
    ScenarioConfig cfg = find_preset("fig1")->cfg;
    RunRng rng(run_seed(cfg.master_seed, 0), cfg.n_nodes);
    Network net = init_kout(cfg, rng);
    CycleRunner runner(cfg);
    for (int k = 0; k < 10; ++k) runner.run_cycle(net, rng);
    for (auto _ : state) benchmark::DoNotOptimize(detect_hubs(net, 10, 0.5));
}
BENCHMARK(BM_DetectHubs)->Unit(benchmark::kMicrosecond);

void BM_SharedPrngBounded(benchmark::State& state) {
    SharedPrng prng(42);
    const auto n = static_cast<std::int32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prng.bounded(n));
}
BENCHMARK(BM_SharedPrngBounded)->Arg(1000)->Arg(1024);

void BM_SelectNewHubs(benchmark::State& state) {
    std::int32_t seed = 0;
    const LivenessQuery alive = [](NodeId) { return true; };
    for (auto _ : state) benchmark::DoNotOptimize(select_new_hubs(seed++, 1000, 10, alive));
}
BENCHMARK(BM_SelectNewHubs);

}  // namespace
BENCHMARK_MAIN();
