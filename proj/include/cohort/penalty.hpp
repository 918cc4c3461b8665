#pragma once

#include <string_view>

namespace cohort {

/// How a negative objective is folded into the pseudo-objective.
enum class NegativeMode {
    /// phi = |-f + penalty|. As written for negative objectives; note that it
    /// rewards objectives closer to zero, i.e. it reverses the direction of
    /// descent for problems whose optimum is negative.
    literal,
    /// phi = f + |f| * violation, the ordinary additive form.
    magnitude_shift,
};

enum class PenaltyBranch { standard, negative, near_zero, infinity_guard };

std::string_view to_string(NegativeMode m);
NegativeMode parse_negative_mode(std::string_view text);
std::string_view to_string(PenaltyBranch b);

struct PenaltyConfig {
    /// Objectives with 0 <= f < threshold take the offset branch.
    double near_zero_threshold = 1.0;
    double int_offset = 1.0;
    /// Stand-in magnitude when the objective is infinite.
    double infinity_substitute = 1.0;
    NegativeMode negative_mode = NegativeMode::literal;

    /// Requires int_offset >= near_zero_threshold so that f + int_offset > 0
    /// whenever the near-zero branch is taken.
    void validate() const;
};

struct PseudoObjective {
    double phi = 0.0;
    double penalty = 0.0;
    PenaltyBranch branch = PenaltyBranch::standard;
};

/// infinity_guard > negative > near_zero > standard. NaN is rejected.
PenaltyBranch select_branch(double f, const PenaltyConfig& cfg);

/// Self-adaptive penalty: the candidate's own objective (or a stand-in for it)
/// scales its aggregate violation. No multiplier to tune.
double sapf_penalty(double f, double violation, PenaltyBranch branch, const PenaltyConfig& cfg);

PseudoObjective pseudo_objective(double f, double penalty, PenaltyBranch branch, const PenaltyConfig& cfg);

/// select_branch + sapf_penalty + pseudo_objective in one call.
PseudoObjective apply_sapf(double f, double violation, const PenaltyConfig& cfg);

}  // namespace cohort
