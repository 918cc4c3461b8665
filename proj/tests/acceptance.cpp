// Acceptance runs: 30 seeded runs per criterion, one PASS/FAIL line each.
#include "properties.hpp"
#include "support.hpp"

#include "cohort/experiment.hpp"
#include "cohort/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

using namespace cohort;

namespace {

constexpr std::size_t runs = 30;
constexpr std::uint64_t base_seed = 1;
constexpr double time_limit = 300.0;

int failures = 0;

void report(const char* id, bool ok, const std::string& detail)
{
    std::printf("%s %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

SolverSettings ci_settings(double R, std::size_t t)
{
    SolverSettings s;
    s.ci.reduction_factor = R;
    s.ci.variations_per_attempt = t;
    s.ci.max_function_evaluations = 30000;
    s.ci.saturation_window = 1000;
    return s;
}

SolverSettings cbo_settings(std::size_t C)
{
    SolverSettings s;
    s.cbo.cohort_size = C;
    s.cbo.max_function_evaluations = 30000;
    s.cbo.saturation_window = 1000;
    return s;
}

struct Batch {
    RunStatistics stats;
    double seconds = 0.0;
};

Batch batch(const ProblemDefinition& p, Algorithm a, const SolverSettings& s)
{
    const auto t0 = std::chrono::steady_clock::now();
    Batch b;
    b.stats = compute_statistics(run_batch_parallel(p, a, s, runs, base_seed));
    b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return b;
}

std::string summary(const Batch& b)
{
    return fmt("fr=%g best=%.10g mean=%.10g time=%.1fs", b.stats.fr, b.stats.best, b.stats.mean, b.seconds);
}

bool all_feasible(const Batch& b)
{
    return b.stats.feasible_runs == runs && b.seconds < time_limit;
}

void a1()
{
    SolverSettings s = ci_settings(0.98, 10);
    s.ci.penalty.near_zero_threshold = 10.0;
    s.ci.penalty.int_offset = 10.0;
    const Batch b = batch(get_problem("RC08"), Algorithm::ci_sapf, s);
    report("A1", all_feasible(b) && std::abs(b.stats.best - 2.0) <= 1e-3, "RC08 ci-sapf " + summary(b));
}

void a2()
{
    const double ref = 263.8959;
    const Batch ci = batch(get_problem("RC20"), Algorithm::ci_sapf, ci_settings(0.98, 10));
    const Batch cbo = batch(get_problem("RC20"), Algorithm::ci_sapf_cbo, cbo_settings(100));
    auto ok = [&](const Batch& b) {
        return all_feasible(b) && std::abs(b.stats.best - ref) <= 5e-4 * ref && std::abs(b.stats.mean - ref) <= 1e-3 * ref;
    };
    report("A2", ok(ci) && ok(cbo), "RC20 ci-sapf " + summary(ci) + " | ci-sapf-cbo " + summary(cbo));
}

void a3()
{
    const Batch b = batch(get_problem("RC21"), Algorithm::ci_sapf_cbo, cbo_settings(100));
    report("A3", all_feasible(b) && std::abs(b.stats.best - 0.235242458) <= 1e-6, "RC21 ci-sapf-cbo " + summary(b));
}

void a4()
{
    const Batch b = batch(get_problem("RC31"), Algorithm::ci_sapf, ci_settings(0.98, 10));
    const double oracle = testsupport::gear_bruteforce_parallel();
    const bool oracle_ok = std::abs(oracle - 2.7009e-12) <= 1e-4 * 2.7009e-12;
    const bool ok = oracle_ok && b.stats.feasible_runs > 0 && b.stats.best <= 1e-9 &&
                    b.stats.best >= oracle * (1.0 - 1e-12) && b.seconds < time_limit;
    report("A4", ok, "RC31 ci-sapf " + summary(b) + fmt(" oracle=%.6g", oracle));
}

void a5()
{
    const Batch b = batch(get_problem("RC18"), Algorithm::ci_sapf_cbo, cbo_settings(100));
    report("A5", all_feasible(b) && b.stats.best <= 1.04 * 5885.3327736,
           "RC18 ci-sapf-cbo " + summary(b) + fmt(" limit=%.6g", 1.04 * 5885.3327736));
}

void a6()
{
    const Batch b = batch(get_problem("RC17"), Algorithm::ci_sapf, ci_settings(0.98, 20));
    const double ref = 1.2665232788e-2;
    report("A6", all_feasible(b) && std::abs(b.stats.best - ref) <= 0.02 * ref, "RC17 ci-sapf " + summary(b));
}

void a7()
{
    SolverSettings s = ci_settings(0.98, 10);
    s.ci.penalty.negative_mode = NegativeMode::magnitude_shift;
    const Batch b = batch(get_problem("RC32"), Algorithm::ci_sapf, s);
    const double ref = -30665.538672;
    report("A7", all_feasible(b) && std::abs(b.stats.best - ref) <= 1e-3 * std::abs(ref),
           "RC32 ci-sapf shift " + summary(b));
}

void a8()
{
    std::size_t passed = 0;
    std::string first_failure;
    const auto outcomes = testsupport::run_all_properties(base_seed, 1000);
    for (const auto& o : outcomes) {
        if (o.passed() && o.cases >= 1000)
            ++passed;
        else if (first_failure.empty())
            first_failure = " first failure: " + o.name + ": " + o.failure;
    }
    report("A8", passed == outcomes.size(),
           fmt("%g/%g properties, 1000 cases each", static_cast<double>(passed), static_cast<double>(outcomes.size())) +
               first_failure);
}

void a9()
{
    const ProblemDefinition p = testsupport::unit_square_problem();
    SolverSettings ci_s = ci_settings(0.98, 10);
    SolverSettings cbo_s = cbo_settings(100);
    ci_s.ci.penalty.near_zero_threshold = ci_s.ci.penalty.int_offset = 10.0;
    cbo_s.cbo.penalty = ci_s.ci.penalty;
    const Batch ci = batch(p, Algorithm::ci_sapf, ci_s);
    const Batch cbo = batch(p, Algorithm::ci_sapf_cbo, cbo_s);
    auto ok = [](const Batch& b) { return b.stats.feasible_runs > 0 && std::abs(b.stats.best - 1.0) <= 1e-4; };
    report("A9", ok(ci) && ok(cbo), "x^2, x>=1 ci-sapf " + summary(ci) + " | ci-sapf-cbo " + summary(cbo));
}

}  // namespace

int main()
{
    a1();
    a2();
    a3();
    a4();
    a5();
    a6();
    a7();
    a8();
    a9();
    return failures == 0 ? 0 : 1;
}
