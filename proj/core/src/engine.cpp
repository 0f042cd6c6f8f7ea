#include "liftsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "liftsim/adversary.hpp"
#include "liftsim/elevator.hpp"
#include "liftsim/lift.hpp"

namespace liftsim {

RunLog& RunLog::operator+=(const RunLog& o) noexcept {
    short_hub_prefixes += o.short_hub_prefixes;
    lift_aborts += o.lift_aborts;
    lift_redistributions += o.lift_redistributions;
    hub_overcount_cycles += o.hub_overcount_cycles;
    return *this;
}

Network init_kout(const ScenarioConfig& cfg, RunRng& rng) {
    const std::size_t n = cfg.n_nodes;
    Network net;
    net.nodes.resize(n);

    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    for (NodeId id = 0; id < n; ++id) {
        auto& node = net.nodes[id];
        node.id = id;
        // Distinct c-subset via a partial shuffle of a scratch permutation.
        rng.node(id).shuffle_prefix(std::span<NodeId>(ids), cfg.cache_size);
        node.cache.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(cfg.cache_size));
    }

    const std::size_t b = cfg.byzantine_count();
    if (b > 0) {
        std::vector<NodeId> members(n);
        std::iota(members.begin(), members.end(), NodeId{0});
        rng.scheduler().shuffle_prefix(std::span<NodeId>(members), b);
        members.resize(b);
        const Behavior behavior = byzantine_behavior(cfg.attack);
        for (NodeId id : members) net.nodes[id].behavior = behavior;
        net.roster = ByzantineRoster(std::move(members));
    }
    return net;
}

CycleRunner::CycleRunner(const ScenarioConfig& cfg, EngineOptions opts)
    : cfg_(cfg), opts_(std::move(opts)), freq_(cfg.n_nodes) {
    responses_.resize(cfg.cache_size);
    for (auto& r : responses_) r.peer_cache.reserve(cfg.cache_size);
}

void CycleRunner::apply_kills(Network& net) const {
    const auto it = opts_.kill_schedule.find(net.cycle);
    if (it == opts_.kill_schedule.end()) return;
    for (NodeId id : it->second) {
        if (id < net.size()) net.nodes[id].alive = false;
    }
}

void CycleRunner::apply_lift(Network& net, RunRng& rng) {
    const LivenessQuery alive = [&net](NodeId id) { return net.is_alive(id); };
    // Every new cache is computed from the pre-activation state before any is
    // installed, so all nodes act on the same snapshot.
    std::vector<std::optional<Cache>> replaced(net.size());
    for (auto& node : net.nodes) {
        if (!node.alive || node.behavior != Behavior::Correct) continue;
        if (node.cache.size() < cfg_.hub_target) ++log_.short_hub_prefixes;
        replaced[node.id] = lift_redistribute(node, cfg_.n_nodes, cfg_.hub_target, cfg_.cache_size,
                                              alive, rng.node(node.id));
        if (replaced[node.id]) {
            ++log_.lift_redistributions;
        } else {
            ++log_.lift_aborts;
        }
    }
    for (auto& node : net.nodes) {
        if (replaced[node.id]) node.cache = std::move(*replaced[node.id]);
    }
}

void CycleRunner::respond(Network& net, NodeId responder, NodeId requester, RunRng& rng,
                          CacheResponse& out) {
    auto& node = net.nodes[responder];
    auto& node_rng = rng.node(responder);
    switch (node.behavior) {
        case Behavior::Correct:
            handle_cache_request(node, requester, node_rng, out);
            break;
        case Behavior::PassiveByzantine:
            passive_response(node, requester, node_rng, out);
            break;
        case Behavior::ActiveByzantine:
        case Behavior::NonCoordByzantine:
            noncoord_response(node, requester, node_rng, out);
            break;
        case Behavior::CoordByzantine:
            coordinated_response(node, requester, net.roster, cfg_.cache_size, node_rng, out);
            break;
    }
}

void CycleRunner::run_cycle(Network& net, RunRng& rng) {
    apply_kills(net);
    if (cfg_.lift_cycle && *cfg_.lift_cycle == net.cycle) apply_lift(net, rng);

    order_.resize(net.size());
    std::iota(order_.begin(), order_.end(), NodeId{0});
    rng.scheduler().shuffle(order_);

    const bool deferred = opts_.semantics == ResponseSemantics::Snapshot;
    if (deferred) pending_.assign(net.size(), Cache{});

    for (NodeId id : order_) {
        if (!net.nodes[id].alive) continue;
        // The request list is frozen at step start.
        requests_ = net.nodes[id].cache;
        if (responses_.size() < requests_.size()) responses_.resize(requests_.size());
        std::size_t received = 0;
        for (NodeId peer : requests_) {
            if (!net.is_alive(peer)) continue;
            respond(net, peer, id, rng, responses_[received++]);
        }
        Cache next = elevator_step(std::span<const CacheResponse>(responses_.data(), received),
                                   cfg_.hub_target, cfg_.cache_size, rng.node(id), freq_);
        if (deferred) {
            pending_[id] = std::move(next);
        } else {
            net.nodes[id].cache = std::move(next);
        }
    }

    if (deferred) {
        for (auto& node : net.nodes) {
            if (node.alive) node.cache = std::move(pending_[node.id]);
        }
    }
    ++net.cycle;
}

void run_cycle(Network& net, const ScenarioConfig& cfg, RunRng& rng, const EngineOptions& opts) {
    CycleRunner runner(cfg, opts);
    runner.run_cycle(net, rng);
}

std::uint64_t run_seed(std::uint64_t master_seed, std::uint32_t run_index) noexcept {
    return substream(master_seed, run_index);
}

RunResult run_single(const ScenarioConfig& cfg, std::uint32_t run_index, const EngineOptions& opts) {
    RunRng rng(run_seed(cfg.master_seed, run_index), cfg.n_nodes);
    Network net = init_kout(cfg, rng);
    CycleRunner runner(cfg, opts);
    HubTracker tracker(cfg.hub_target, cfg.hub_threshold);

    RunResult result;
    result.run_index = run_index;
    result.records.reserve(cfg.total_cycles);
    for (std::uint32_t k = 0; k < cfg.total_cycles; ++k) {
        const std::uint32_t cycle = net.cycle;
        runner.run_cycle(net, rng);
        auto record = tracker.observe(net, run_index, cycle);
        if (record.total_hubs > cfg.hub_target) ++result.log.hub_overcount_cycles;
        result.records.push_back(std::move(record));
        if (opts.observer) opts.observer(run_index, net);
    }
    result.log += runner.log();
    return result;
}

std::vector<RunResult> run_scenario(const ScenarioConfig& cfg, const EngineOptions& opts) {
    std::vector<RunResult> results(cfg.runs);
    unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : opts.workers;
    workers = std::min<unsigned>(workers, cfg.runs);

    if (workers <= 1) {
        for (std::uint32_t r = 0; r < cfg.runs; ++r) results[r] = run_single(cfg, r, opts);
        return results;
    }

    std::atomic<std::uint32_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::uint32_t r = next++; r < cfg.runs && !failed; r = next++) {
                try {
                    results[r] = run_single(cfg, r, opts);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace liftsim
