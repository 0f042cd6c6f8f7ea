#include "liftsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

namespace liftsim {

std::vector<NodeId> detect_hubs(const Network& net, std::size_t h, double tau) {
    std::vector<std::uint32_t> votes(net.size(), 0);
    std::size_t voters = 0;
    for (const auto& node : net.nodes) {
        if (!node.alive || node.behavior != Behavior::Correct) continue;
        ++voters;
        const std::size_t prefix = std::min(h, node.cache.size());
        for (std::size_t i = 0; i < prefix; ++i) {
            if (node.cache[i] < votes.size()) ++votes[node.cache[i]];
        }
    }
    if (voters == 0) return {};
    const auto needed = std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(std::ceil(tau * static_cast<double>(voters) - 1e-9)));
    std::vector<NodeId> hubs;
    for (NodeId id = 0; id < votes.size(); ++id) {
        if (votes[id] >= needed) hubs.push_back(id);
    }
    return hubs;
}

std::size_t count_byzantine_hubs(std::span<const NodeId> hubs, const Network& net) {
    return static_cast<std::size_t>(
        std::count_if(hubs.begin(), hubs.end(), [&](NodeId id) { return net.is_byzantine(id); }));
}

double mean_hub_indegree(std::span<const NodeId> hubs, const Network& net) {
    if (hubs.empty()) return 0.0;
    std::vector<std::uint32_t> indegree(net.size(), 0);
    for (const auto& node : net.nodes) {
        if (!node.alive || node.behavior != Behavior::Correct) continue;
        for (NodeId id : node.cache) {
            if (id < indegree.size()) ++indegree[id];
        }
    }
    std::uint64_t total = 0;
    for (NodeId id : hubs) total += indegree.at(id);
    return static_cast<double>(total) / static_cast<double>(hubs.size());
}

CycleRecord HubTracker::observe(const Network& net, std::uint32_t run_index, std::uint32_t cycle) {
    CycleRecord r;
    r.run_index = run_index;
    r.cycle = cycle;
    r.hubs = detect_hubs(net, h_, tau_);
    r.total_hubs = r.hubs.size();
    r.byzantine_hubs = count_byzantine_hubs(r.hubs, net);
    r.correct_hubs = r.total_hubs - r.byzantine_hubs;
    r.mean_hub_indegree = mean_hub_indegree(r.hubs, net);
    r.converged = r.total_hubs == h_ && previous_ && *previous_ == r.hubs;
    previous_ = r.hubs;
    return r;
}

std::optional<std::uint32_t> convergence_cycle(std::span<const CycleRecord> records, std::size_t h) {
    constexpr std::size_t kStableFollowers = 3;
    for (std::size_t i = 0; i + kStableFollowers < records.size(); ++i) {
        if (records[i].total_hubs != h) continue;
        bool stable = true;
        for (std::size_t k = 1; k <= kStableFollowers && stable; ++k) {
            stable = records[i + k].hubs == records[i].hubs;
        }
        if (stable) return records[i].cycle;
    }
    return std::nullopt;
}

std::string_view to_string(Metric m) noexcept {
    switch (m) {
        case Metric::TotalHubs: return "total_hubs";
        case Metric::ByzantineHubs: return "byzantine_hubs";
        case Metric::CorrectHubs: return "correct_hubs";
        case Metric::Converged: return "converged";
        case Metric::MeanHubIndegree: return "mean_hub_indegree";
    }
    return "unknown";
}

double metric_value(const CycleRecord& r, Metric m) noexcept {
    switch (m) {
        case Metric::TotalHubs: return static_cast<double>(r.total_hubs);
        case Metric::ByzantineHubs: return static_cast<double>(r.byzantine_hubs);
        case Metric::CorrectHubs: return static_cast<double>(r.correct_hubs);
        case Metric::Converged: return r.converged ? 1.0 : 0.0;
        case Metric::MeanHubIndegree: return r.mean_hub_indegree;
    }
    return 0.0;
}

SummaryStats summarize(std::vector<double> values) {
    SummaryStats s;
    s.n = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() < 2) return s;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    boost::math::students_t dist(n - 1.0);
    const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
    s.stddev = sd;
    s.ci95 = t * sd / std::sqrt(n);
    return s;
}

std::vector<AggregateRow> aggregate(std::span<const CycleRecord> records) {
    std::map<std::uint32_t, std::vector<const CycleRecord*>> by_cycle;
    for (const auto& r : records) by_cycle[r.cycle].push_back(&r);

    std::vector<AggregateRow> rows;
    rows.reserve(by_cycle.size() * kAllMetrics.size());
    std::vector<double> values;
    for (const auto& [cycle, group] : by_cycle) {
        for (Metric m : kAllMetrics) {
            values.clear();
            for (const auto* r : group) values.push_back(metric_value(*r, m));
            rows.push_back({cycle, m, summarize(values)});
        }
    }
    return rows;
}

SummaryStats cycle_stats(std::span<const CycleRecord> records, std::uint32_t cycle, Metric m) {
    std::vector<double> values;
    for (const auto& r : records) {
        if (r.cycle == cycle) values.push_back(metric_value(r, m));
    }
    return summarize(std::move(values));
}

}  // namespace liftsim
