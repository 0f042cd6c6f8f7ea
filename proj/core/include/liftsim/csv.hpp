#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "liftsim/metrics.hpp"

namespace liftsim {

inline constexpr std::string_view kRawCsvHeader =
    "run,cycle,total_hubs,byzantine_hubs,correct_hubs,converged,mean_hub_indegree";
inline constexpr std::string_view kAggregateCsvHeader = "cycle,metric,mean,std,ci95,runs";

// Shortest decimal that round-trips.
std::string format_double(double v);

// One row per record, sorted by (run, cycle) before writing.
void write_raw_csv(std::ostream& out, std::span<const CycleRecord> records);

// std and ci95 are left empty when fewer than two runs contributed.
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows);

// Opens `path` for writing or throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace liftsim
