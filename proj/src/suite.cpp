#include "cohort/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace cohort {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
constexpr double inf = std::numeric_limits<double>::infinity();

std::vector<VariableKind> continuous(std::size_t n)
{
    return std::vector<VariableKind>(n, VariableKind::continuous);
}

/// Process synthesis problem (case I) with one binary variable.
/// Formulation: Floudas' MINLP benchmark as distributed with the CEC 2020
/// real-world constrained suite.
ProblemDefinition rc08()
{
    ProblemDefinition p;
    p.id = "RC08";
    p.name = "Process synthesis problem";
    p.category = Category::process_synthesis;
    p.bounds = Bounds({0.0, 0.0}, {1.6, 1.0});
    p.kinds = {VariableKind::continuous, VariableKind::integer};
    p.objective = [](std::span<const double> x) { return 2.0 * x[0] + x[1]; };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        g[0] = 1.25 - x[0] * x[0] - x[1];
        g[1] = x[0] + x[1] - 1.6;
    };
    p.inequality_count = 2;
    p.best_known = 2.0;
    p.documented_optimum = DecisionVector{0.5, 1.0};
    return p;
}

/// Process flow sheeting problem, one binary variable.
/// Formulation: CEC 2020 real-world suite; bounds on x2 are [-2.22554, -1].
ProblemDefinition rc10()
{
    ProblemDefinition p;
    p.id = "RC10";
    p.name = "Process flow sheeting problem";
    p.category = Category::process_synthesis;
    p.bounds = Bounds({0.2, -2.22554, 0.0}, {1.0, -1.0, 1.0});
    p.kinds = {VariableKind::continuous, VariableKind::continuous, VariableKind::integer};
    p.objective = [](std::span<const double> x) {
        return -0.7 * x[2] + 5.0 * (x[0] - 0.5) * (x[0] - 0.5) + 0.8;
    };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        g[0] = -std::exp(x[0] - 0.2) - x[1];
        g[1] = x[1] + 1.1 * x[2] + 1.0;
        g[2] = x[0] - x[2] - 0.2;
    };
    p.inequality_count = 3;
    p.best_known = 1.0765430833;
    p.documented_optimum = DecisionVector{0.9419373448, -2.1, 1.0};
    return p;
}

/// Weight minimisation of a speed reducer (Golinski).
/// Formulation: CEC 2020 real-world suite version, which uses 7.477 in the
/// cubic shaft term and 16.91e6 in the first stress constraint.
ProblemDefinition rc15()
{
    ProblemDefinition p;
    p.id = "RC15";
    p.name = "Weight Minimization of a Speed Reducer";
    p.category = Category::mechanical;
    p.bounds = Bounds({2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0}, {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5});
    p.kinds = continuous(7);
    p.objective = [](std::span<const double> x) {
        return 0.7854 * x[0] * x[1] * x[1] * (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934)
               - 1.508 * x[0] * (x[5] * x[5] + x[6] * x[6])
               + 7.477 * (std::pow(x[5], 3) + std::pow(x[6], 3))
               + 0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6]);
    };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        const double x2x3 = x[1] * x[2];
        g[0] = -x[0] * x[1] * x[1] * x[2] + 27.0;
        g[1] = -x[0] * x[1] * x[1] * x[2] * x[2] + 397.5;
        g[2] = -x[1] * std::pow(x[5], 4) * x[2] / std::pow(x[3], 3) + 1.93;
        g[3] = -x[1] * std::pow(x[6], 4) * x[2] / std::pow(x[4], 3) + 1.93;
        g[4] = 10.0 / std::pow(x[5], 3) * std::sqrt(16.91e6 + std::pow(745.0 * x[3] / x2x3, 2)) - 1100.0;
        g[5] = 10.0 / std::pow(x[6], 3) * std::sqrt(157.5e6 + std::pow(745.0 * x[4] / x2x3, 2)) - 850.0;
        g[6] = x2x3 - 40.0;
        g[7] = -x[0] / x[1] + 5.0;
        g[8] = x[0] / x[1] - 12.0;
        g[9] = 1.5 * x[5] - x[3] + 1.9;
        g[10] = 1.1 * x[6] - x[4] + 1.9;
    };
    p.inequality_count = 11;
    p.best_known = 2994.4244658;
    p.documented_optimum =
        DecisionVector{3.5, 0.7, 17.0, 7.3, 7.715319911478245, 3.3505409491058926, 5.286654464980222};
    return p;
}

/// Tension/compression spring, case 1 (Belegundu; Arora).
/// The three constraints carrying the optimum are kept; the outer-diameter
/// limit is never active and is left out so the count matches the suite.
ProblemDefinition rc17()
{
    ProblemDefinition p;
    p.id = "RC17";
    p.name = "Tension/compression spring design (case 1)";
    p.category = Category::mechanical;
    p.bounds = Bounds({0.05, 0.25, 2.0}, {2.0, 1.3, 15.0});
    p.kinds = continuous(3);
    p.objective = [](std::span<const double> x) { return x[0] * x[0] * x[1] * (x[2] + 2.0); };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        const double d = x[0], D = x[1], N = x[2];
        g[0] = 1.0 - D * D * D * N / (71785.0 * std::pow(d, 4));
        g[1] = (4.0 * D * D - d * D) / (12566.0 * (D * d * d * d - std::pow(d, 4))) + 1.0 / (5108.0 * d * d) - 1.0;
        g[2] = 1.0 - 140.45 * d / (D * D * N);
    };
    p.inequality_count = 3;
    p.best_known = 1.2665232788e-2;
    p.documented_optimum = DecisionVector{0.051689061, 0.356717736, 11.288967};
    return p;
}

/// Pressure vessel (Sandgren), continuous shell and head thickness.
/// Thickness bounds [0.0625, 6.1875] as in the discrete variant's range.
ProblemDefinition rc18()
{
    ProblemDefinition p;
    p.id = "RC18";
    p.name = "Pressure vessel design";
    p.category = Category::mechanical;
    p.bounds = Bounds({0.0625, 0.0625, 10.0, 10.0}, {6.1875, 6.1875, 200.0, 200.0});
    p.kinds = continuous(4);
    p.objective = [](std::span<const double> x) {
        return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] + 3.1661 * x[0] * x[0] * x[3]
               + 19.84 * x[0] * x[0] * x[2];
    };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        g[0] = -x[0] + 0.0193 * x[2];
        g[1] = -x[1] + 0.00954 * x[2];
        g[2] = -pi * x[2] * x[2] * x[3] - 4.0 / 3.0 * pi * std::pow(x[2], 3) + 1296000.0;
        g[3] = x[3] - 240.0;
    };
    p.inequality_count = 4;
    p.best_known = 5885.3327736;
    p.documented_optimum = DecisionVector{0.7781686414, 0.3846491628, 40.3196187241, 200.0};
    return p;
}

/// Welded beam (Ragsdell and Phillips), five-constraint form.
ProblemDefinition rc19()
{
    ProblemDefinition p;
    p.id = "RC19";
    p.name = "Welded beam design";
    p.category = Category::mechanical;
    p.bounds = Bounds({0.125, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0});
    p.kinds = continuous(4);
    p.objective = [](std::span<const double> x) {
        return 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
    };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        constexpr double P = 6000.0, L = 14.0, E = 30e6, G = 12e6;
        const double Pc = 4.013 * E * std::sqrt(x[2] * x[2] * std::pow(x[3], 6) / 30.0) / (L * L)
                          * (1.0 - x[2] / (2.0 * L) * std::sqrt(E / (4.0 * G)));
        const double sigma = 6.0 * P * L / (x[3] * x[2] * x[2]);
        const double delta = 6.0 * P * L * L * L / (E * x[2] * x[2] * x[3]);
        const double half_sum = (x[0] + x[2]) * (x[0] + x[2]) / 4.0;
        const double J = 2.0 * (sqrt2 * x[0] * x[1] * (x[1] * x[1] / 4.0 + half_sum));
        const double R = std::sqrt(x[1] * x[1] / 4.0 + half_sum);
        const double M = P * (L + x[1] / 2.0);
        const double tau2 = M * R / J;
        const double tau1 = P / (sqrt2 * x[0] * x[1]);
        const double tau = std::sqrt(tau1 * tau1 + 2.0 * tau1 * tau2 * x[1] / (2.0 * R) + tau2 * tau2);
        g[0] = tau - 13600.0;
        g[1] = sigma - 30000.0;
        g[2] = x[0] - x[3];
        g[3] = delta - 0.25;
        g[4] = P - Pc;
    };
    p.inequality_count = 5;
    p.best_known = 1.6702177263;
    p.documented_optimum = DecisionVector{0.19883231, 3.3373653, 9.19202432, 0.19883231};
    return p;
}

/// Three-bar truss (Nowacki). A zero cross-section makes the stresses
/// unbounded and the constraints report +inf.
ProblemDefinition rc20()
{
    ProblemDefinition p;
    p.id = "RC20";
    p.name = "Three-bar truss design problem";
    p.category = Category::mechanical;
    p.bounds = Bounds({0.0, 0.0}, {1.0, 1.0});
    p.kinds = continuous(2);
    p.objective = [](std::span<const double> x) { return 100.0 * (2.0 * sqrt2 * x[0] + x[1]); };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        constexpr double P = 2.0, sigma = 2.0;
        const double d12 = sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1];
        const double d3 = sqrt2 * x[1] + x[0];
        g[0] = d12 > 0.0 ? (sqrt2 * x[0] + x[1]) / d12 * P - sigma : inf;
        g[1] = d12 > 0.0 ? x[1] / d12 * P - sigma : inf;
        g[2] = d3 > 0.0 ? 1.0 / d3 * P - sigma : inf;
    };
    p.inequality_count = 3;
    p.best_known = 263.89584338;
    p.documented_optimum = DecisionVector{0.78867514, 0.40824829};
    return p;
}

/// Multiple disk clutch brake (Osyczka), all variables integer.
/// Of the eight constraints in some listings, the two that can never bind on
/// this box (T >= 0 and Vsr <= Vsrmax) are omitted so the count is six.
ProblemDefinition rc21()
{
    ProblemDefinition p;
    p.id = "RC21";
    p.name = "Multiple disk clutch brake design problem";
    p.category = Category::mechanical;
    p.bounds = Bounds({60.0, 90.0, 1.0, 0.0, 2.0}, {80.0, 110.0, 3.0, 1000.0, 9.0});
    p.kinds = std::vector<VariableKind>(5, VariableKind::integer);
    p.objective = [](std::span<const double> x) {
        constexpr double rho = 7.8e-6;
        return pi * (x[1] * x[1] - x[0] * x[0]) * x[2] * (x[4] + 1.0) * rho;
    };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        constexpr double Mf = 3.0, Ms = 40.0, Iz = 55.0, n = 250.0, Tmax = 15.0, s = 1.5, delta = 0.5,
                         Vsrmax = 10.0, pmax = 1.0, mu = 0.6, Lmax = 30.0, dR = 20.0;
        const double ri = x[0], ro = x[1], t = x[2], F = x[3], Z = x[4];
        const double cube_diff = ro * ro * ro - ri * ri * ri;
        const double sq_diff = ro * ro - ri * ri;
        const double Rsr = 2.0 / 3.0 * cube_diff / (ro * ro * ri * ri);
        const double Vsr = pi * Rsr * n / 30.0;
        const double A = pi * sq_diff;
        const double Prz = F / A;
        const double w = pi * n / 30.0;
        const double Mh = 2.0 / 3.0 * mu * F * Z * cube_diff / sq_diff;
        const double T = Iz * w / (Mh + Mf);
        g[0] = Prz - pmax;
        g[1] = Prz * Vsr - pmax * Vsrmax;
        g[2] = ri + dR - ro;
        g[3] = (Z + 1.0) * (t + delta) - Lmax;
        g[4] = s * Ms - Mh;
        g[5] = T - Tmax;
    };
    p.inequality_count = 6;
    p.best_known = 0.2352424579;
    p.documented_optimum = DecisionVector{70.0, 90.0, 1.0, 1000.0, 2.0};
    return p;
}

/// Gear train (Sandgren), integer tooth counts in [12, 60]. The suite lists
/// one inequality and one equality; both are identically zero.
ProblemDefinition rc31()
{
    ProblemDefinition p;
    p.id = "RC31";
    p.name = "Gear train design Problem";
    p.category = Category::mechanical;
    p.bounds = Bounds(std::vector<double>(4, 12.0), std::vector<double>(4, 60.0));
    p.kinds = std::vector<VariableKind>(4, VariableKind::integer);
    p.objective = [](std::span<const double> x) {
        const double e = 1.0 / 6.931 - x[1] * x[3] / (x[0] * x[2]);
        return e * e;
    };
    p.constraints = [](std::span<const double>, std::span<double> g, std::span<double> h) {
        g[0] = 0.0;
        h[0] = 0.0;
    };
    p.inequality_count = 1;
    p.equality_count = 1;
    p.best_known = 0.0;
    p.documented_optimum = DecisionVector{49.0, 19.0, 43.0, 16.0};
    return p;
}

/// Himmelblau's nonlinear problem (Himmelblau 1972, problem 11), with the
/// three two-sided bounds split into six inequalities.
ProblemDefinition rc32()
{
    ProblemDefinition p;
    p.id = "RC32";
    p.name = "Himmelblau's Function";
    p.category = Category::mechanical;
    p.bounds = Bounds({78.0, 33.0, 27.0, 27.0, 27.0}, {102.0, 45.0, 45.0, 45.0, 45.0});
    p.kinds = continuous(5);
    p.objective = [](std::span<const double> x) {
        return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
    };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) {
        const double G1 = 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
        const double G2 = 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
        const double G3 = 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
        g[0] = G1 - 92.0;
        g[1] = -G1;
        g[2] = G2 - 110.0;
        g[3] = -G2 + 90.0;
        g[4] = G3 - 25.0;
        g[5] = -G3 + 20.0;
    };
    p.inequality_count = 6;
    p.best_known = -30665.538672;
    p.documented_optimum = DecisionVector{78.0, 33.0, 29.995256025682, 45.0, 36.775812905788};
    return p;
}

const std::map<std::string, ProblemRecord, std::less<>>& registry()
{
    static const std::map<std::string, ProblemRecord, std::less<>> table = [] {
        std::map<std::string, ProblemRecord, std::less<>> m;
        for (auto make : {rc08, rc10, rc15, rc17, rc18, rc19, rc20, rc21, rc31, rc32}) {
            ProblemDefinition def = make();
            def.validate();
            ProblemRecord r;
            r.suite_id = def.id;
            r.name = def.name;
            r.category = def.category;
            r.dimension = def.dimension();
            r.inequality_count = def.inequality_count;
            r.equality_count = def.equality_count;
            r.best_known = def.best_known.value_or(0.0);
            r.definition = std::move(def);
            m.emplace(r.suite_id, std::move(r));
        }
        return m;
    }();
    return table;
}

}  // namespace

const ProblemDefinition& get_problem(std::string_view suite_id)
{
    const auto& reg = registry();
    const auto it = reg.find(suite_id);
    if (it == reg.end()) {
        std::string msg = "unknown problem '" + std::string(suite_id) + "'; available:";
        for (const auto& [id, rec] : reg)
            msg += " " + id;
        throw ProblemNotFound(msg);
    }
    return it->second.definition;
}

std::vector<ProblemRecord> list_problems(std::optional<Category> category)
{
    std::vector<ProblemRecord> out;
    for (const auto& [id, rec] : registry()) {
        if (!category || rec.category == *category)
            out.push_back(rec);
    }
    return out;
}

std::vector<std::string> problem_ids()
{
    std::vector<std::string> out;
    for (const auto& [id, rec] : registry())
        out.push_back(id);
    return out;
}

}  // namespace cohort
