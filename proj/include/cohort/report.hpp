#pragma once

#include "cohort/experiment.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohort {

/// File system failure while writing or reading a report; the message names the path.
class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "%.10g"
std::string format_number(double v);

/// Writes into dir (created if missing):
///   summary.csv   one row per (problem, algorithm); no timings, so identical
///                 configurations give identical bytes
///   summary.json  the same rows plus avg_time
///   timing.csv    problem, algorithm, avg_time
///   trace_<problem>_<run>.csv  attempt, best_phi, best_f, best_violation
/// Throws InvalidInput for an empty list, before touching the disk.
void emit_report(const std::vector<RunStatistics>& stats, const std::filesystem::path& dir);

std::string summary_csv(const std::vector<RunStatistics>& stats);
std::string trace_csv(const RunResult& run);

/// Parses summary.csv back. per_run and avg_time are not restored.
std::vector<RunStatistics> read_summary_csv(const std::filesystem::path& path);
std::vector<RunStatistics> parse_summary_csv(const std::string& text);

}  // namespace cohort
