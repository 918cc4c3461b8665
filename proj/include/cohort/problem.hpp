#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohort {

/// Raised when a caller hands the library malformed input (wrong dimension,
/// non-finite coordinates, inconsistent bounds, invalid configuration).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a user-supplied objective or constraint evaluator returns NaN.
/// Infinite values are not faults; they flow on to the penalty stage.
class EvaluationFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using DecisionVector = std::vector<double>;

enum class VariableKind { continuous, integer };

enum class Category {
    industrial_chemical,
    process_synthesis,
    mechanical,
    power_system,
    power_electronics,
    livestock,
};

std::string_view to_string(Category c);
Category parse_category(std::string_view text);

/// Box constraints. lower[i] <= upper[i] is checked on construction.
class Bounds {
public:
    Bounds() = default;
    Bounds(std::vector<double> lower, std::vector<double> upper);

    std::size_t size() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }
    bool contains(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

struct ConstraintEvaluation {
    std::vector<double> g;  // inequalities, satisfied when g_i <= 0
    std::vector<double> h;  // equalities, satisfied when |h_j| <= eps
};

struct Evaluation {
    double objective = 0.0;
    ConstraintEvaluation constraints;
    double violation = 0.0;
    bool feasible = true;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;
/// Fills g (size inequality_count) and h (size equality_count) in one pass so
/// that problems can share intermediate quantities between constraints.
using ConstraintFn = std::function<void(std::span<const double> x, std::span<double> g, std::span<double> h)>;

struct ProblemDefinition {
    std::string id;
    std::string name;
    Category category = Category::mechanical;
    Bounds bounds;
    std::vector<VariableKind> kinds;
    ObjectiveFn objective;
    ConstraintFn constraints;
    std::size_t inequality_count = 0;
    std::size_t equality_count = 0;
    double equality_tolerance = 1e-4;
    std::optional<double> best_known;
    /// Best solution published for the formulation, used to validate it.
    std::optional<DecisionVector> documented_optimum;

    std::size_t dimension() const { return bounds.size(); }

    /// Throws InvalidInput when the pieces do not fit together.
    void validate() const;
};

/// max(0, |h| - eps)
double equality_violation(double h, double eps);

/// Sum of positive inequality parts plus relaxed equality violations.
double total_violation(const ConstraintEvaluation& c, double eps);

/// Clamp into the box, then round integer dimensions to the nearest integer.
DecisionVector clip_to_bounds(std::span<const double> x, const Bounds& bounds, std::span<const VariableKind> kinds);

/// Evaluates objective and constraints at x and bumps `evaluations` by one.
///
/// x must have the problem's dimension, be finite, lie inside the bounds and
/// hold integral values on integer dimensions (clip_to_bounds produces such
/// points). A NaN from the objective or any constraint is an EvaluationFault.
Evaluation evaluate(const ProblemDefinition& problem, std::span<const double> x, std::uint64_t& evaluations);
Evaluation evaluate(const ProblemDefinition& problem, std::span<const double> x);

}  // namespace cohort
