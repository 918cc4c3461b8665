#pragma once

#include "cohort/problem.hpp"
#include "cohort/random.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace testsupport {

/// minimize x^2 s.t. x >= 1 on [-5, 5]; optimum f = 1 at x = 1.
cohort::ProblemDefinition unit_square_problem();

/// Wraps a problem so that every point handed to the objective is recorded.
struct Recorder {
    std::vector<cohort::DecisionVector> points;
};
cohort::ProblemDefinition recording(const cohort::ProblemDefinition& base, std::shared_ptr<Recorder> rec);

/// Random box-constrained problem: 1 to 4 variables, random (sometimes
/// degenerate or integer) bounds, quadratic objective that may go negative,
/// up to two linear inequalities and an optional equality.
cohort::ProblemDefinition random_problem(cohort::RandomSource& gen);

/// Independent gear-train objective, written from the ratio definition.
double gear_error(int a, int b, int c, int d);

/// Exhaustive minimum of gear_error over [12, 60]^4.
double gear_bruteforce_serial();
double gear_bruteforce_parallel();

}  // namespace testsupport
