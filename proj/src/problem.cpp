#include "cohort/problem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace cohort {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 6> category_names{{
    {Category::industrial_chemical, "industrial_chemical"},
    {Category::process_synthesis, "process_synthesis"},
    {Category::mechanical, "mechanical"},
    {Category::power_system, "power_system"},
    {Category::power_electronics, "power_electronics"},
    {Category::livestock, "livestock"},
}};

}  // namespace

std::string_view to_string(Category c)
{
    for (const auto& [cat, name] : category_names) {
        if (cat == c)
            return name;
    }
    return "unknown";
}

Category parse_category(std::string_view text)
{
    for (const auto& [cat, name] : category_names) {
        if (name == text)
            return cat;
    }
    std::string msg = "unknown category '" + std::string(text) + "'; expected one of:";
    for (const auto& entry : category_names)
        msg += " " + std::string(entry.second);
    throw InvalidInput(msg);
}

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.size() != upper_.size())
        throw InvalidInput("bounds: lower and upper have different lengths");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
            throw InvalidInput("bounds: non-finite bound on dimension " + std::to_string(i));
        if (lower_[i] > upper_[i])
            throw InvalidInput("bounds: lower > upper on dimension " + std::to_string(i));
    }
}

bool Bounds::contains(std::span<const double> x) const
{
    if (x.size() != size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i]))
            return false;
    }
    return true;
}

void ProblemDefinition::validate() const
{
    if (dimension() == 0)
        throw InvalidInput(id + ": dimension must be positive");
    if (kinds.size() != dimension())
        throw InvalidInput(id + ": variable kinds do not match the dimension");
    if (!objective)
        throw InvalidInput(id + ": missing objective");
    if ((inequality_count + equality_count) > 0 && !constraints)
        throw InvalidInput(id + ": constraint counts declared without a constraint evaluator");
    if (!(equality_tolerance > 0.0))
        throw InvalidInput(id + ": equality tolerance must be positive");
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (kinds[i] == VariableKind::integer
            && (bounds.lower(i) != std::round(bounds.lower(i)) || bounds.upper(i) != std::round(bounds.upper(i))))
            throw InvalidInput(id + ": integer dimension " + std::to_string(i) + " has non-integral bounds");
    }
}

double equality_violation(double h, double eps)
{
    if (!(eps > 0.0))
        throw InvalidInput("equality_violation: eps must be positive");
    return std::max(0.0, std::abs(h) - eps);
}

double total_violation(const ConstraintEvaluation& c, double eps)
{
    double sum = 0.0;
    for (double g : c.g)
        sum += std::max(0.0, g);
    for (double h : c.h)
        sum += equality_violation(h, eps);
    return sum;
}

DecisionVector clip_to_bounds(std::span<const double> x, const Bounds& bounds, std::span<const VariableKind> kinds)
{
    if (x.size() != bounds.size() || kinds.size() != bounds.size())
        throw InvalidInput("clip_to_bounds: dimension mismatch");
    DecisionVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::clamp(out[i], bounds.lower(i), bounds.upper(i));
        if (kinds[i] == VariableKind::integer)
            out[i] = std::round(out[i]);
    }
    return out;
}

Evaluation evaluate(const ProblemDefinition& problem, std::span<const double> x, std::uint64_t& evaluations)
{
    const std::size_t n = problem.dimension();
    if (x.size() != n)
        throw InvalidInput(problem.id + ": expected " + std::to_string(n) + " variables, got " + std::to_string(x.size()));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x[i]))
            throw InvalidInput(problem.id + ": non-finite variable " + std::to_string(i));
        if (x[i] < problem.bounds.lower(i) || x[i] > problem.bounds.upper(i))
            throw InvalidInput(problem.id + ": variable " + std::to_string(i) + " outside bounds");
        if (problem.kinds[i] == VariableKind::integer && x[i] != std::round(x[i]))
            throw InvalidInput(problem.id + ": integer variable " + std::to_string(i) + " is not integral");
    }

    Evaluation e;
    e.constraints.g.assign(problem.inequality_count, 0.0);
    e.constraints.h.assign(problem.equality_count, 0.0);
    ++evaluations;

    e.objective = problem.objective(x);
    if (std::isnan(e.objective))
        throw EvaluationFault(problem.id + ": objective returned NaN");
    if (problem.constraints)
        problem.constraints(x, e.constraints.g, e.constraints.h);
    for (std::size_t i = 0; i < e.constraints.g.size(); ++i) {
        if (std::isnan(e.constraints.g[i]))
            throw EvaluationFault(problem.id + ": inequality " + std::to_string(i) + " returned NaN");
    }
    for (std::size_t j = 0; j < e.constraints.h.size(); ++j) {
        if (std::isnan(e.constraints.h[j]))
            throw EvaluationFault(problem.id + ": equality " + std::to_string(j) + " returned NaN");
    }

    e.violation = total_violation(e.constraints, problem.equality_tolerance);
    e.feasible = e.violation == 0.0;
    return e;
}

Evaluation evaluate(const ProblemDefinition& problem, std::span<const double> x)
{
    std::uint64_t unused = 0;
    return evaluate(problem, x, unused);
}

}  // namespace cohort
