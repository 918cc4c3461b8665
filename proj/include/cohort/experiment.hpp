#pragma once

#include "cohort/cbo.hpp"
#include "cohort/ci.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cohort {

enum class Algorithm { ci_sapf, ci_sapf_cbo };

/// "ci-sapf" / "ci-sapf-cbo"
std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);

struct SolverSettings {
    CiConfig ci;
    CboConfig cbo;
};

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::ci_sapf;
    std::vector<std::string> problem_ids;
    std::size_t runs = 30;
    std::uint64_t base_seed = 0;
    SolverSettings solver;
    std::filesystem::path output_dir;
    /// Run the seeds of a problem concurrently. Results do not depend on it.
    bool parallel = true;
};

struct RunStatistics {
    std::string problem;
    Algorithm algorithm = Algorithm::ci_sapf;
    std::size_t runs = 0;
    std::size_t feasible_runs = 0;
    /// Objective statistics over feasible runs; meaningless when feasible_runs == 0.
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double std = 0.0;  // population
    /// Mean of the final incumbent's violation over all runs.
    double mcv = 0.0;
    double fr = 0.0;  // percent
    double avg_fe = 0.0;
    double avg_time = 0.0;
    double violation_best = 0.0;
    double violation_mean = 0.0;
    double violation_worst = 0.0;
    std::vector<RunResult> per_run;
};

/// Requires at least one result. Labels (problem, algorithm) are left empty.
RunStatistics compute_statistics(const std::vector<RunResult>& results);

/// Runs seed base_seed + i for i in [0, runs). One run per call, in order.
std::vector<RunResult> run_batch_serial(const ProblemDefinition& problem, Algorithm algorithm,
                                        const SolverSettings& solver, std::size_t runs, std::uint64_t base_seed);

/// Same contract as run_batch_serial with the runs spread over OpenMP threads.
std::vector<RunResult> run_batch_parallel(const ProblemDefinition& problem, Algorithm algorithm,
                                          const SolverSettings& solver, std::size_t runs, std::uint64_t base_seed);

RunResult run_once(const ProblemDefinition& problem, Algorithm algorithm, const SolverSettings& solver,
                   std::uint64_t seed);

/// All ids are resolved and the solver config checked before any run starts.
std::vector<RunStatistics> run_experiment(const ExperimentConfig& cfg);

}  // namespace cohort
