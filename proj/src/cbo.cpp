#include "cohort/cbo.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace cohort {

void CboConfig::validate() const
{
    if (cohort_size < 2 || cohort_size % 2 != 0)
        throw InvalidInput("cbo: cohort size must be even and at least 2, got " + std::to_string(cohort_size));
    if (max_learning_attempts < 1)
        throw InvalidInput("cbo: max learning attempts must be positive");
    if (max_function_evaluations < cohort_size)
        throw InvalidInput("cbo: max function evaluations must cover the initial cohort");
    if (saturation_window < 2)
        throw InvalidInput("cbo: saturation window must be at least 2");
    if (!(saturation_tolerance >= 0.0))
        throw InvalidInput("cbo: saturation tolerance must be non-negative");
    penalty.validate();
}

std::vector<BodyRole> assign_roles(std::span<const Candidate> cohort)
{
    const std::size_t n = cohort.size();
    if (n < 2 || n % 2 != 0)
        throw InvalidInput("assign_roles: cohort size must be even and at least 2");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cohort[a].phi != cohort[b].phi)
            return cohort[a].phi < cohort[b].phi;
        return incumbent_better(score_of(cohort[a]), score_of(cohort[b]));
    });

    const std::size_t half = n / 2;
    std::vector<BodyRole> roles(n);
    for (std::size_t r = 0; r < half; ++r) {
        const std::size_t stat = order[r];
        const std::size_t mov = order[r + half];
        roles[stat] = {BodyRole::stationary, mov};
        roles[mov] = {BodyRole::moving, stat};
    }
    return roles;
}

std::vector<double> masses(std::span<const double> probs)
{
    return {probs.begin(), probs.end()};
}

DecisionVector velocity_before(std::span<const double> moving_position,
                               std::span<const double> partner_stationary_position)
{
    DecisionVector v(moving_position.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = moving_position[i] - partner_stationary_position[i];
    return v;
}

DecisionVector velocity_after_moving(double m_mov, double m_stat, std::span<const double> v, double eps)
{
    const double factor = (m_mov - eps * m_stat) / (m_mov + m_stat);
    DecisionVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = factor * v[i];
    return out;
}

DecisionVector velocity_after_stationary(double m_mov, double m_stat, std::span<const double> v_mov, double eps)
{
    const double factor = (m_mov + eps * m_mov) / (m_stat + m_mov);
    DecisionVector out(v_mov.size());
    for (std::size_t i = 0; i < v_mov.size(); ++i)
        out[i] = factor * v_mov[i];
    return out;
}

double cor_schedule(std::size_t k, std::size_t k_max)
{
    if (k_max < 1 || k > k_max)
        throw InvalidInput("cor_schedule: need 0 <= k <= k_max and k_max >= 1");
    return 1.0 - static_cast<double>(k) / static_cast<double>(k_max);
}

CollisionState collide(std::span<const Candidate> reference, std::span<const BodyRole> roles,
                       std::span<const double> body_masses, double eps)
{
    const std::size_t n = reference.size();
    CollisionState st;
    st.masses.assign(body_masses.begin(), body_masses.end());
    st.epsilon = eps;
    st.velocities_before.resize(n);
    st.velocities_after.resize(n);

    for (std::size_t c = 0; c < n; ++c) {
        if (roles[c].role == BodyRole::stationary)
            st.velocities_before[c].assign(reference[c].position.size(), 0.0);
        else
            st.velocities_before[c] = velocity_before(reference[c].position, reference[roles[c].partner_index].position);
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (roles[c].role != BodyRole::moving)
            continue;
        const std::size_t s = roles[c].partner_index;
        double m_mov = body_masses[c];
        double m_stat = body_masses[s];
        if (m_mov + m_stat <= 0.0)
            m_mov = m_stat = 1.0;
        st.velocities_after[c] = velocity_after_moving(m_mov, m_stat, st.velocities_before[c], eps);
        st.velocities_after[s] = velocity_after_stationary(m_mov, m_stat, st.velocities_before[c], eps);
    }
    return st;
}

std::vector<Candidate> update_positions(std::span<const Candidate> reference, std::span<const BodyRole> roles,
                                        std::span<const DecisionVector> velocities_after,
                                        const ProblemDefinition& problem, const PenaltyConfig& penalty,
                                        RandomSource& rng, std::uint64_t& evaluations)
{
    const std::size_t n = problem.dimension();
    std::vector<Candidate> next;
    next.reserve(reference.size());
    for (std::size_t c = 0; c < reference.size(); ++c) {
        const DecisionVector& base = roles[c].role == BodyRole::stationary
                                         ? reference[c].position
                                         : reference[roles[c].partner_index].position;
        DecisionVector x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = base[i] + rng.uniform(-1.0, 1.0) * velocities_after[c][i];
        next.push_back(make_candidate(problem, clip_to_bounds(x, problem.bounds, problem.kinds), penalty, evaluations));
    }
    return next;
}

RunResult ci_sapf_cbo_run(const ProblemDefinition& problem, const CboConfig& cfg)
{
    cfg.validate();
    problem.validate();
    const auto start = std::chrono::steady_clock::now();

    RandomSource rng(cfg.seed);
    RunResult out;
    detail::IncumbentTracker incumbent;

    CiConfig init;
    init.cohort_size = cfg.cohort_size;
    init.penalty = cfg.penalty;
    std::vector<Candidate> cohort = initialize_cohort(problem, init, rng, out.function_evaluations);
    for (const Candidate& c : cohort)
        incumbent.observe(c);

    const std::size_t C = cfg.cohort_size;
    const std::size_t k_max = static_cast<std::size_t>(
        std::min<std::uint64_t>(cfg.max_learning_attempts, (cfg.max_function_evaluations - C) / C));

    std::vector<double> phis(C);
    std::vector<Candidate> reference(C);
    while (out.learning_attempts < k_max) {
        for (std::size_t c = 0; c < C; ++c)
            phis[c] = cohort[c].phi;
        const std::vector<double> probs = selection_probabilities(phis);
        for (std::size_t c = 0; c < C; ++c) {
            const std::size_t followed = roulette_select(probs, rng.uniform());
            reference[c] = cfg.follow_mode == FollowMode::replace_reference ? cohort[followed] : cohort[c];
        }

        const std::vector<BodyRole> roles = assign_roles(reference);
        for (std::size_t c = 0; c < C; ++c)
            phis[c] = reference[c].phi;
        const std::vector<double> m = masses(selection_probabilities(phis));
        const double eps = cor_schedule(out.learning_attempts + 1, k_max);
        const CollisionState st = collide(reference, roles, m, eps);

        cohort = update_positions(reference, roles, st.velocities_after, problem, cfg.penalty, rng,
                                  out.function_evaluations);
        ++out.learning_attempts;
        for (const Candidate& c : cohort)
            incumbent.observe(c);
        incumbent.record(out.learning_attempts, out.trace);
        if (check_saturation(out.trace, cfg.saturation_window, cfg.saturation_tolerance))
            break;
    }

    incumbent.finish(out);
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace cohort
