#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "liftsim/config.hpp"
#include "liftsim/frequency_map.hpp"
#include "liftsim/metrics.hpp"
#include "liftsim/network.hpp"
#include "liftsim/rng.hpp"

namespace liftsim {

enum class ResponseSemantics : std::uint8_t {
    // Replies reflect the responder as it is right now, including a cache it
    // already rebuilt earlier in this cycle. New caches install immediately.
    Live,
    // Replies carry pre-cycle caches; every new cache installs at cycle end.
    // Backward lists still update as requests arrive.
    Snapshot,
};

// Things a run noticed but kept going through.
struct RunLog {
    std::size_t short_hub_prefixes = 0;  // LIFT read a cache shorter than h
    std::size_t lift_aborts = 0;         // fewer than h live nodes at activation
    std::size_t lift_redistributions = 0;
    std::size_t hub_overcount_cycles = 0;  // detected hubs exceeded h

    RunLog& operator+=(const RunLog& o) noexcept;
};

struct EngineOptions {
    ResponseSemantics semantics = ResponseSemantics::Live;
    // Nodes taken down at the start of the given cycle, before anything else
    // runs in it.
    std::map<std::uint32_t, std::vector<NodeId>> kill_schedule;
    // Parallel runs in run_scenario; 0 picks the hardware concurrency.
    unsigned workers = 1;
    // Invoked after every cycle from the thread executing that run.
    std::function<void(std::uint32_t run_index, const Network&)> observer;
};

// Random k-out start with k = c, plus Byzantine placement. Caches are c
// distinct uniform ids (self allowed); B = round(f * N) Byzantine ids are
// drawn without replacement from the scheduler stream.
Network init_kout(const ScenarioConfig& cfg, RunRng& rng);

// Executes exactly one cycle of a run: LIFT first when the cycle is the
// activation cycle, then every alive node's active step in a fresh random
// order.
class CycleRunner {
public:
    CycleRunner(const ScenarioConfig& cfg, EngineOptions opts = {});

    void run_cycle(Network& net, RunRng& rng);

    const RunLog& log() const noexcept { return log_; }

private:
    void apply_kills(Network& net) const;
    void apply_lift(Network& net, RunRng& rng);
    void respond(Network& net, NodeId responder, NodeId requester, RunRng& rng, CacheResponse& out);

    ScenarioConfig cfg_;
    EngineOptions opts_;
    RunLog log_;
    FrequencyMap freq_;
    std::vector<NodeId> order_;
    Cache requests_;
    std::vector<CacheResponse> responses_;
    std::vector<Cache> pending_;
};

void run_cycle(Network& net, const ScenarioConfig& cfg, RunRng& rng,
               const EngineOptions& opts = {});

std::uint64_t run_seed(std::uint64_t master_seed, std::uint32_t run_index) noexcept;

struct RunResult {
    std::uint32_t run_index = 0;
    std::vector<CycleRecord> records;
    RunLog log;
};

// One full run: init_kout, then cfg.total_cycles cycles with a CycleRecord
// after each.
RunResult run_single(const ScenarioConfig& cfg, std::uint32_t run_index,
                     const EngineOptions& opts = {});

// cfg.runs independent runs; results are indexed by run regardless of how
// many workers executed them.
std::vector<RunResult> run_scenario(const ScenarioConfig& cfg, const EngineOptions& opts = {});

}  // namespace liftsim
