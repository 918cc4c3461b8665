#include "cohort/experiment.hpp"
#include "cohort/suite.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace cohort;

namespace {

SolverSettings settings()
{
    SolverSettings s;
    s.ci.variations_per_attempt = 10;
    s.ci.reduction_factor = 0.98;
    s.ci.max_function_evaluations = 30000;
    s.ci.saturation_window = 1000;
    s.cbo.cohort_size = 100;
    s.cbo.max_function_evaluations = 30000;
    s.cbo.saturation_window = 1000;
    return s;
}

void batch(benchmark::State& state, bool parallel, const char* id, Algorithm algo)
{
    const ProblemDefinition& p = get_problem(id);
    const SolverSettings s = settings();
    const auto runs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = parallel ? run_batch_parallel(p, algo, s, runs, 1) : run_batch_serial(p, algo, s, runs, 1);
        benchmark::DoNotOptimize(r.data());
    }
    state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
    state.counters["runs/s"] = benchmark::Counter(static_cast<double>(runs * state.iterations()),
                                                  benchmark::Counter::kIsRate);
}

}  // namespace

BENCHMARK_CAPTURE(batch, rc18_cbo_serial, false, "RC18", Algorithm::ci_sapf_cbo)->Arg(30)->UseRealTime();
BENCHMARK_CAPTURE(batch, rc18_cbo_parallel, true, "RC18", Algorithm::ci_sapf_cbo)->Arg(30)->UseRealTime();
BENCHMARK_CAPTURE(batch, rc15_ci_serial, false, "RC15", Algorithm::ci_sapf)->Arg(30)->UseRealTime();
BENCHMARK_CAPTURE(batch, rc15_ci_parallel, true, "RC15", Algorithm::ci_sapf)->Arg(30)->UseRealTime();

BENCHMARK_MAIN();
