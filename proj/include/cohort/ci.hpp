#pragma once

#include "cohort/penalty.hpp"
#include "cohort/problem.hpp"
#include "cohort/random.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cohort {

struct Candidate {
    DecisionVector position;
    /// Current sampling range per variable; always inside the problem bounds.
    std::vector<double> lower;
    std::vector<double> upper;
    /// Width before intersection with the bounds. Contracts by R every attempt.
    std::vector<double> nominal_width;
    Evaluation evaluation;
    double phi = 0.0;
};

struct TraceRecord {
    std::size_t attempt = 0;
    double best_phi = 0.0;
    double best_f = 0.0;
    double best_violation = 0.0;
};

struct RunResult {
    DecisionVector best_position;
    double best_objective = 0.0;
    double best_phi = 0.0;
    double best_violation = 0.0;
    bool feasible = false;
    std::uint64_t function_evaluations = 0;
    std::size_t learning_attempts = 0;
    double wall_time = 0.0;
    std::vector<TraceRecord> trace;
};

struct CiConfig {
    std::size_t cohort_size = 5;
    double reduction_factor = 0.95;
    std::size_t variations_per_attempt = 1;
    std::size_t max_learning_attempts = 1000;
    std::uint64_t max_function_evaluations = 30000;
    std::size_t saturation_window = 20;
    double saturation_tolerance = 1e-6;
    /// Reset every sampling interval to the full bounds on saturation and keep
    /// going until a budget runs out.
    bool restart_on_saturation = false;
    PenaltyConfig penalty;
    std::uint64_t seed = 0;

    void validate() const;
};

/// The quantities the incumbent ordering looks at.
struct Score {
    double objective = 0.0;
    double violation = 0.0;
    bool feasible = false;
    double phi = 0.0;
};

Score score_of(const Candidate& c);

/// Feasible beats infeasible; feasible pairs compare by objective, infeasible
/// pairs by violation and then phi. Strict weak ordering.
bool incumbent_better(const Score& a, const Score& b);

/// Evaluates x (already clipped) and fills evaluation and phi.
Candidate make_candidate(const ProblemDefinition& problem, DecisionVector x, const PenaltyConfig& penalty,
                         std::uint64_t& evaluations);

/// Uniform sampling inside the bounds, intervals set to the bounds.
std::vector<Candidate> initialize_cohort(const ProblemDefinition& problem, const CiConfig& cfg, RandomSource& rng,
                                         std::uint64_t& evaluations);

/// p_c = (1/phi_c) / sum(1/phi). Non-positive values shift the whole set up by
/// -min + 1e-9 * max(1, |min|) first. +inf gets probability 0 and -inf entries
/// share all of it.
std::vector<double> selection_probabilities(std::span<const double> phis);

/// First index whose cumulative probability exceeds u.
std::size_t roulette_select(std::span<const double> probs, double u);

/// Interval of width current_width * R centred on followed_value, cut to [lo, hi].
std::pair<double, double> shrink_interval(double followed_value, double current_width, double R, double lo,
                                          double hi);

/// One synchronous pass over the cohort: every candidate picks whom to follow
/// from the same snapshot, so the outcome does not depend on visiting order.
void learning_attempt(std::vector<Candidate>& cohort, const ProblemDefinition& problem, const CiConfig& cfg,
                      RandomSource& rng, std::uint64_t& evaluations);

/// True iff the last `window` best_phi values span at most tol.
bool check_saturation(std::span<const TraceRecord> trace, std::size_t window, double tol);

RunResult ci_sapf_run(const ProblemDefinition& problem, const CiConfig& cfg);

namespace detail {

/// Keeps the best candidate seen so far and appends trace records.
class IncumbentTracker {
public:
    void observe(const Candidate& c);
    void record(std::size_t attempt, std::vector<TraceRecord>& trace) const;
    void finish(RunResult& out) const;
    bool empty() const { return !has_; }

private:
    bool has_ = false;
    Score best_{};
    DecisionVector position_;
};

}  // namespace detail

}  // namespace cohort
