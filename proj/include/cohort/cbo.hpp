#pragma once

#include "cohort/ci.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cohort {

/// How the roulette choice feeds the collision phase.
enum class FollowMode {
    /// The choice is drawn but collisions use the members' own positions.
    record_only,
    /// Each member takes the followed candidate's position and phi as its
    /// reference before roles are assigned.
    replace_reference,
};

struct BodyRole {
    enum Kind { stationary, moving };
    Kind role = stationary;
    std::size_t partner_index = 0;
};

struct CboConfig {
    std::size_t cohort_size = 6;
    std::size_t max_learning_attempts = 1000;
    std::uint64_t max_function_evaluations = 30000;
    std::size_t saturation_window = 20;
    double saturation_tolerance = 1e-6;
    FollowMode follow_mode = FollowMode::record_only;
    PenaltyConfig penalty;
    std::uint64_t seed = 0;

    /// Rejects an odd cohort before anything is evaluated.
    void validate() const;
};

struct CollisionState {
    std::vector<double> masses;
    std::vector<DecisionVector> velocities_before;
    std::vector<DecisionVector> velocities_after;
    double epsilon = 1.0;
};

/// Roles indexed like the input. Order is by phi, then the incumbent
/// ordering, then index; the better half is stationary and the body at rank
/// C/2 + r pairs with the body at rank r.
std::vector<BodyRole> assign_roles(std::span<const Candidate> cohort);

/// Masses are the selection probabilities themselves.
std::vector<double> masses(std::span<const double> probs);

DecisionVector velocity_before(std::span<const double> moving_position,
                               std::span<const double> partner_stationary_position);

DecisionVector velocity_after_moving(double m_mov, double m_stat, std::span<const double> v, double eps);

DecisionVector velocity_after_stationary(double m_mov, double m_stat, std::span<const double> v_mov, double eps);

/// 1 - k / k_max.
double cor_schedule(std::size_t k, std::size_t k_max);

/// Velocities for every body. Both masses zero falls back to equal masses.
CollisionState collide(std::span<const Candidate> reference, std::span<const BodyRole> roles,
                       std::span<const double> body_masses, double eps);

/// Stationary: X + rand * v'. Moving: X_partner + rand * v'. rand is uniform
/// in [-1, 1] per component. Results are clipped, evaluated and returned with
/// the sampling fields left empty.
std::vector<Candidate> update_positions(std::span<const Candidate> reference, std::span<const BodyRole> roles,
                                        std::span<const DecisionVector> velocities_after,
                                        const ProblemDefinition& problem, const PenaltyConfig& penalty,
                                        RandomSource& rng, std::uint64_t& evaluations);

RunResult ci_sapf_cbo_run(const ProblemDefinition& problem, const CboConfig& cfg);

}  // namespace cohort
