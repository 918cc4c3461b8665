#include "cohort/ci.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace cohort {

void CiConfig::validate() const
{
    if (cohort_size < 2)
        throw InvalidInput("ci: cohort size must be at least 2");
    if (!(reduction_factor > 0.0 && reduction_factor < 1.0))
        throw InvalidInput("ci: reduction factor must lie in (0, 1)");
    if (variations_per_attempt < 1)
        throw InvalidInput("ci: variations per attempt must be positive");
    if (max_learning_attempts < 1)
        throw InvalidInput("ci: max learning attempts must be positive");
    if (max_function_evaluations < cohort_size)
        throw InvalidInput("ci: max function evaluations must cover the initial cohort");
    if (saturation_window < 2)
        throw InvalidInput("ci: saturation window must be at least 2");
    if (!(saturation_tolerance >= 0.0))
        throw InvalidInput("ci: saturation tolerance must be non-negative");
    penalty.validate();
}

Score score_of(const Candidate& c)
{
    return {c.evaluation.objective, c.evaluation.violation, c.evaluation.feasible, c.phi};
}

bool incumbent_better(const Score& a, const Score& b)
{
    if (a.feasible != b.feasible)
        return a.feasible;
    if (a.feasible) {
        if (a.objective != b.objective)
            return a.objective < b.objective;
        return a.phi < b.phi;
    }
    if (a.violation != b.violation)
        return a.violation < b.violation;
    return a.phi < b.phi;
}

Candidate make_candidate(const ProblemDefinition& problem, DecisionVector x, const PenaltyConfig& penalty,
                         std::uint64_t& evaluations)
{
    Candidate c;
    c.position = std::move(x);
    c.evaluation = evaluate(problem, c.position, evaluations);
    c.phi = apply_sapf(c.evaluation.objective, c.evaluation.violation, penalty).phi;
    return c;
}

std::vector<Candidate> initialize_cohort(const ProblemDefinition& problem, const CiConfig& cfg, RandomSource& rng,
                                         std::uint64_t& evaluations)
{
    const Bounds& b = problem.bounds;
    const std::size_t n = problem.dimension();
    std::vector<Candidate> cohort;
    cohort.reserve(cfg.cohort_size);
    for (std::size_t c = 0; c < cfg.cohort_size; ++c) {
        DecisionVector x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = rng.uniform(b.lower(i), b.upper(i));
        Candidate cand = make_candidate(problem, clip_to_bounds(x, b, problem.kinds), cfg.penalty, evaluations);
        cand.lower = b.lower();
        cand.upper = b.upper();
        cand.nominal_width.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            cand.nominal_width[i] = b.width(i);
        cohort.push_back(std::move(cand));
    }
    return cohort;
}

std::vector<double> selection_probabilities(std::span<const double> phis)
{
    const std::size_t n = phis.size();
    std::vector<double> p(n, 0.0);
    if (n == 0)
        return p;

    const auto neg_inf = static_cast<std::size_t>(
        std::count(phis.begin(), phis.end(), -std::numeric_limits<double>::infinity()));
    if (neg_inf > 0) {
        for (std::size_t c = 0; c < n; ++c)
            p[c] = std::isinf(phis[c]) && phis[c] < 0 ? 1.0 / static_cast<double>(neg_inf) : 0.0;
        return p;
    }

    double lo = std::numeric_limits<double>::infinity();
    for (double v : phis) {
        if (std::isfinite(v))
            lo = std::min(lo, v);
    }
    if (!std::isfinite(lo)) {  // everything is +inf
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(n));
        return p;
    }
    const double shift = lo <= 0.0 ? -lo + 1e-9 * std::max(1.0, std::abs(lo)) : 0.0;

    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        p[c] = std::isfinite(phis[c]) ? 1.0 / (phis[c] + shift) : 0.0;
        sum += p[c];
    }
    for (double& v : p)
        v /= sum;
    return p;
}

std::size_t roulette_select(std::span<const double> probs, double u)
{
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t c = 0; c < probs.size(); ++c) {
        cumulative += probs[c];
        if (probs[c] > 0.0)
            last_positive = c;
        if (cumulative > u)
            return c;
    }
    // Rounding left the total just short of u.
    return last_positive;
}

std::pair<double, double> shrink_interval(double followed_value, double current_width, double R, double lo,
                                          double hi)
{
    const double half = 0.5 * current_width * R;
    return {std::max(lo, followed_value - half), std::min(hi, followed_value + half)};
}

void learning_attempt(std::vector<Candidate>& cohort, const ProblemDefinition& problem, const CiConfig& cfg,
                      RandomSource& rng, std::uint64_t& evaluations)
{
    const std::size_t n = problem.dimension();
    const Bounds& b = problem.bounds;

    std::vector<double> phis(cohort.size());
    std::vector<DecisionVector> positions(cohort.size());
    for (std::size_t c = 0; c < cohort.size(); ++c) {
        phis[c] = cohort[c].phi;
        positions[c] = cohort[c].position;
    }
    const std::vector<double> probs = selection_probabilities(phis);

    for (Candidate& cand : cohort) {
        const DecisionVector& followed = positions[roulette_select(probs, rng.uniform())];
        for (std::size_t i = 0; i < n; ++i) {
            const auto [lo, hi] =
                shrink_interval(followed[i], cand.nominal_width[i], cfg.reduction_factor, b.lower(i), b.upper(i));
            cand.nominal_width[i] *= cfg.reduction_factor;
            cand.lower[i] = lo;
            cand.upper[i] = hi;
        }

        Candidate best;
        bool have = false;
        for (std::size_t s = 0; s < cfg.variations_per_attempt; ++s) {
            DecisionVector x(n);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = rng.uniform(cand.lower[i], cand.upper[i]);
            Candidate trial = make_candidate(problem, clip_to_bounds(x, b, problem.kinds), cfg.penalty, evaluations);
            if (!have || trial.phi < best.phi) {
                best = std::move(trial);
                have = true;
            }
        }
        cand.position = std::move(best.position);
        cand.evaluation = std::move(best.evaluation);
        cand.phi = best.phi;
    }
}

bool check_saturation(std::span<const TraceRecord> trace, std::size_t window, double tol)
{
    if (window < 2 || trace.size() < window)
        return false;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const TraceRecord& r : trace.last(window)) {
        lo = std::min(lo, r.best_phi);
        hi = std::max(hi, r.best_phi);
    }
    if (lo == hi)  // also covers a window stuck at +-inf
        return true;
    return hi - lo <= tol;
}

namespace detail {

void IncumbentTracker::observe(const Candidate& c)
{
    const Score s = score_of(c);
    if (!has_ || incumbent_better(s, best_)) {
        best_ = s;
        position_ = c.position;
        has_ = true;
    }
}

void IncumbentTracker::record(std::size_t attempt, std::vector<TraceRecord>& trace) const
{
    trace.push_back({attempt, best_.phi, best_.objective, best_.violation});
}

void IncumbentTracker::finish(RunResult& out) const
{
    out.best_position = position_;
    out.best_objective = best_.objective;
    out.best_phi = best_.phi;
    out.best_violation = best_.violation;
    out.feasible = best_.feasible;
}

}  // namespace detail

RunResult ci_sapf_run(const ProblemDefinition& problem, const CiConfig& cfg)
{
    cfg.validate();
    problem.validate();
    const auto start = std::chrono::steady_clock::now();

    RandomSource rng(cfg.seed);
    RunResult out;
    detail::IncumbentTracker incumbent;

    std::vector<Candidate> cohort = initialize_cohort(problem, cfg, rng, out.function_evaluations);
    for (const Candidate& c : cohort)
        incumbent.observe(c);

    const std::uint64_t per_attempt = cfg.cohort_size * cfg.variations_per_attempt;
    std::size_t epoch_start = 0;
    while (out.learning_attempts < cfg.max_learning_attempts
           && out.function_evaluations + per_attempt <= cfg.max_function_evaluations) {
        learning_attempt(cohort, problem, cfg, rng, out.function_evaluations);
        ++out.learning_attempts;
        for (const Candidate& c : cohort)
            incumbent.observe(c);
        incumbent.record(out.learning_attempts, out.trace);

        const std::span<const TraceRecord> epoch = std::span<const TraceRecord>(out.trace).subspan(epoch_start);
        if (check_saturation(epoch, cfg.saturation_window, cfg.saturation_tolerance)) {
            if (!cfg.restart_on_saturation)
                break;
            for (Candidate& c : cohort) {
                c.lower = problem.bounds.lower();
                c.upper = problem.bounds.upper();
                for (std::size_t i = 0; i < problem.dimension(); ++i)
                    c.nominal_width[i] = problem.bounds.width(i);
            }
            epoch_start = out.trace.size();
        }
    }

    incumbent.finish(out);
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace cohort
