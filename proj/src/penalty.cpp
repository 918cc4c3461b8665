#include "cohort/penalty.hpp"

#include "cohort/problem.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cohort {

std::string_view to_string(NegativeMode m)
{
    return m == NegativeMode::literal ? "literal" : "shift";
}

NegativeMode parse_negative_mode(std::string_view text)
{
    if (text == "literal")
        return NegativeMode::literal;
    if (text == "shift")
        return NegativeMode::magnitude_shift;
    throw InvalidInput("unknown negative mode '" + std::string(text) + "'; expected literal or shift");
}

std::string_view to_string(PenaltyBranch b)
{
    switch (b) {
    case PenaltyBranch::standard:
        return "standard";
    case PenaltyBranch::negative:
        return "negative";
    case PenaltyBranch::near_zero:
        return "near_zero";
    case PenaltyBranch::infinity_guard:
        return "infinity_guard";
    }
    return "unknown";
}

void PenaltyConfig::validate() const
{
    if (!(near_zero_threshold >= 0.0))
        throw InvalidInput("penalty: near_zero_threshold must be >= 0");
    if (!(int_offset > 0.0))
        throw InvalidInput("penalty: int_offset must be > 0");
    if (!(infinity_substitute > 0.0))
        throw InvalidInput("penalty: infinity_substitute must be > 0");
    if (int_offset < near_zero_threshold)
        throw InvalidInput("penalty: int_offset must be >= near_zero_threshold");
}

PenaltyBranch select_branch(double f, const PenaltyConfig& cfg)
{
    if (std::isnan(f))
        throw InvalidInput("select_branch: objective is NaN");
    if (std::isinf(f))
        return PenaltyBranch::infinity_guard;
    if (f < 0.0)
        return PenaltyBranch::negative;
    if (f < cfg.near_zero_threshold)
        return PenaltyBranch::near_zero;
    return PenaltyBranch::standard;
}

double sapf_penalty(double f, double violation, PenaltyBranch branch, const PenaltyConfig& cfg)
{
    // 0 * inf would be NaN for an infinite violation on a zero multiplier;
    // a satisfied point carries no penalty whatever its objective.
    if (violation == 0.0)
        return 0.0;
    switch (branch) {
    case PenaltyBranch::standard:
        return f * violation;
    case PenaltyBranch::negative:
        return std::abs(f) * violation;
    case PenaltyBranch::near_zero:
        return (f + cfg.int_offset) * violation;
    case PenaltyBranch::infinity_guard:
        return cfg.infinity_substitute * violation;
    }
    return 0.0;
}

PseudoObjective pseudo_objective(double f, double penalty, PenaltyBranch branch, const PenaltyConfig& cfg)
{
    PseudoObjective out;
    out.penalty = penalty;
    out.branch = branch;
    if (branch == PenaltyBranch::negative && cfg.negative_mode == NegativeMode::literal)
        out.phi = std::abs(-f + penalty);
    else
        out.phi = f + penalty;
    // -inf objective with infinite violation: the violation wins.
    if (std::isnan(out.phi))
        out.phi = std::numeric_limits<double>::infinity();
    return out;
}

PseudoObjective apply_sapf(double f, double violation, const PenaltyConfig& cfg)
{
    const PenaltyBranch branch = select_branch(f, cfg);
    return pseudo_objective(f, sapf_penalty(f, violation, branch, cfg), branch, cfg);
}

}  // namespace cohort
