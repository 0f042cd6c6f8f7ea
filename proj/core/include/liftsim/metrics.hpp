#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liftsim/network.hpp"

namespace liftsim {

// One row of per-run output.
struct CycleRecord {
    std::uint32_t run_index = 0;
    std::uint32_t cycle = 0;
    std::size_t total_hubs = 0;
    std::size_t byzantine_hubs = 0;
    std::size_t correct_hubs = 0;
    // total_hubs == h and the hub set equals the previous cycle's.
    bool converged = false;
    double mean_hub_indegree = 0.0;
    // Sorted hub ids; kept in memory for stability checks, not written to CSV.
    std::vector<NodeId> hubs;
};

// An id is a hub when it sits in the first h cache slots of at least
// ceil(tau * #correct alive nodes) correct alive nodes. Byzantine caches do not
// vote. Result is sorted ascending.
std::vector<NodeId> detect_hubs(const Network& net, std::size_t h, double tau);

std::size_t count_byzantine_hubs(std::span<const NodeId> hubs, const Network& net);

// Mean over hubs of the number of correct alive nodes holding the hub anywhere
// in their cache. 0 when there are no hubs.
double mean_hub_indegree(std::span<const NodeId> hubs, const Network& net);

// Turns successive network states of one run into CycleRecords.
class HubTracker {
public:
    HubTracker(std::size_t h, double tau) : h_(h), tau_(tau) {}

    CycleRecord observe(const Network& net, std::uint32_t run_index, std::uint32_t cycle);

private:
    std::size_t h_;
    double tau_;
    std::optional<std::vector<NodeId>> previous_;
};

// First cycle whose record has exactly h hubs with the same hub set in the
// next three records. Records must be ordered by cycle.
std::optional<std::uint32_t> convergence_cycle(std::span<const CycleRecord> records, std::size_t h);

enum class Metric : std::uint8_t { TotalHubs, ByzantineHubs, CorrectHubs, Converged, MeanHubIndegree };

inline constexpr std::array<Metric, 5> kAllMetrics = {
    Metric::TotalHubs, Metric::ByzantineHubs, Metric::CorrectHubs, Metric::Converged,
    Metric::MeanHubIndegree};

std::string_view to_string(Metric m) noexcept;
double metric_value(const CycleRecord& r, Metric m) noexcept;

struct SummaryStats {
    double mean = 0.0;
    std::optional<double> stddev;  // sample standard deviation; needs n >= 2
    std::optional<double> ci95;    // Student-t 95% half-width; needs n >= 2
    std::size_t n = 0;
};

// Order of `values` does not affect the result (they are summed sorted).
SummaryStats summarize(std::vector<double> values);

struct AggregateRow {
    std::uint32_t cycle = 0;
    Metric metric = Metric::TotalHubs;
    SummaryStats stats;
};

// Cycle-aligned statistics over runs, ordered by (cycle, metric). Input order
// is irrelevant.
std::vector<AggregateRow> aggregate(std::span<const CycleRecord> records);

// Statistics of one metric over the records of a given cycle.
SummaryStats cycle_stats(std::span<const CycleRecord> records, std::uint32_t cycle, Metric m);

}  // namespace liftsim
