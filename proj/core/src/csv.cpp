#include "liftsim/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <tuple>
#include <vector>

#include "liftsim/config.hpp"

namespace liftsim {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

void write_raw_csv(std::ostream& out, std::span<const CycleRecord> records) {
    std::vector<const CycleRecord*> sorted;
    sorted.reserve(records.size());
    for (const auto& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const CycleRecord* a, const CycleRecord* b) {
        return std::tie(a->run_index, a->cycle) < std::tie(b->run_index, b->cycle);
    });

    out << kRawCsvHeader << '\n';
    for (const auto* r : sorted) {
        out << r->run_index << ',' << r->cycle << ',' << r->total_hubs << ',' << r->byzantine_hubs
            << ',' << r->correct_hubs << ',' << (r->converged ? 1 : 0) << ','
            << format_double(r->mean_hub_indegree) << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows) {
    out << kAggregateCsvHeader << '\n';
    for (const auto& row : rows) {
        out << row.cycle << ',' << to_string(row.metric) << ',' << format_double(row.stats.mean)
            << ',';
        if (row.stats.stddev) out << format_double(*row.stats.stddev);
        out << ',';
        if (row.stats.ci95) out << format_double(*row.stats.ci95);
        out << ',' << row.stats.n << '\n';
    }
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace liftsim
