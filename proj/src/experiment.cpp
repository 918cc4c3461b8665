#include "cohort/experiment.hpp"

#include "cohort/suite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <omp.h>

namespace cohort {

std::string_view to_string(Algorithm a)
{
    return a == Algorithm::ci_sapf ? "ci-sapf" : "ci-sapf-cbo";
}

Algorithm parse_algorithm(std::string_view text)
{
    if (text == "ci-sapf")
        return Algorithm::ci_sapf;
    if (text == "ci-sapf-cbo")
        return Algorithm::ci_sapf_cbo;
    throw InvalidInput("unknown algorithm '" + std::string(text) + "'; expected ci-sapf or ci-sapf-cbo");
}

RunStatistics compute_statistics(const std::vector<RunResult>& results)
{
    if (results.empty())
        throw InvalidInput("compute_statistics: no runs");

    RunStatistics s;
    s.runs = results.size();
    std::vector<double> objectives;
    double fe = 0.0, time = 0.0, vsum = 0.0;
    s.violation_best = results.front().best_violation;
    s.violation_worst = results.front().best_violation;
    for (const RunResult& r : results) {
        if (r.feasible)
            objectives.push_back(r.best_objective);
        fe += static_cast<double>(r.function_evaluations);
        time += r.wall_time;
        vsum += r.best_violation;
        s.violation_best = std::min(s.violation_best, r.best_violation);
        s.violation_worst = std::max(s.violation_worst, r.best_violation);
    }
    const double n = static_cast<double>(s.runs);
    s.feasible_runs = objectives.size();
    s.fr = 100.0 * static_cast<double>(s.feasible_runs) / n;
    s.mcv = vsum / n;
    s.violation_mean = s.mcv;
    s.avg_fe = fe / n;
    s.avg_time = time / n;

    if (!objectives.empty()) {
        std::sort(objectives.begin(), objectives.end());
        const std::size_t k = objectives.size();
        s.best = objectives.front();
        s.worst = objectives.back();
        s.median = k % 2 == 1 ? objectives[k / 2] : 0.5 * (objectives[k / 2 - 1] + objectives[k / 2]);
        double sum = 0.0;
        for (double v : objectives)
            sum += v;
        s.mean = sum / static_cast<double>(k);
        double sq = 0.0;
        for (double v : objectives)
            sq += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(sq / static_cast<double>(k));
    }
    return s;
}

RunResult run_once(const ProblemDefinition& problem, Algorithm algorithm, const SolverSettings& solver,
                   std::uint64_t seed)
{
    if (algorithm == Algorithm::ci_sapf) {
        CiConfig cfg = solver.ci;
        cfg.seed = seed;
        return ci_sapf_run(problem, cfg);
    }
    CboConfig cfg = solver.cbo;
    cfg.seed = seed;
    return ci_sapf_cbo_run(problem, cfg);
}

std::vector<RunResult> run_batch_serial(const ProblemDefinition& problem, Algorithm algorithm,
                                        const SolverSettings& solver, std::size_t runs, std::uint64_t base_seed)
{
    std::vector<RunResult> out;
    out.reserve(runs);
    for (std::size_t i = 0; i < runs; ++i)
        out.push_back(run_once(problem, algorithm, solver, base_seed + i));
    return out;
}

std::vector<RunResult> run_batch_parallel(const ProblemDefinition& problem, Algorithm algorithm,
                                          const SolverSettings& solver, std::size_t runs, std::uint64_t base_seed)
{
    std::vector<RunResult> out(runs);
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(runs);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] =
                run_once(problem, algorithm, solver, base_seed + static_cast<std::uint64_t>(i));
        } catch (...) {
#pragma omp critical(cohort_batch_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }

    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<RunStatistics> run_experiment(const ExperimentConfig& cfg)
{
    if (cfg.problem_ids.empty())
        throw InvalidInput("experiment: no problems selected");
    if (cfg.runs < 1)
        throw InvalidInput("experiment: runs must be positive");
    if (cfg.algorithm == Algorithm::ci_sapf)
        cfg.solver.ci.validate();
    else
        cfg.solver.cbo.validate();

    std::vector<const ProblemDefinition*> problems;
    for (const std::string& id : cfg.problem_ids)
        problems.push_back(&get_problem(id));

    std::vector<RunStatistics> out;
    for (const ProblemDefinition* p : problems) {
        std::vector<RunResult> results = cfg.parallel
                                             ? run_batch_parallel(*p, cfg.algorithm, cfg.solver, cfg.runs, cfg.base_seed)
                                             : run_batch_serial(*p, cfg.algorithm, cfg.solver, cfg.runs, cfg.base_seed);
        RunStatistics s = compute_statistics(results);
        s.problem = p->id;
        s.algorithm = cfg.algorithm;
        s.per_run = std::move(results);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace cohort
