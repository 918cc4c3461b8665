#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace testsupport {

using namespace cohort;

ProblemDefinition unit_square_problem()
{
    ProblemDefinition p;
    p.id = "square";
    p.name = "x^2 s.t. x >= 1";
    p.bounds = Bounds({-5.0}, {5.0});
    p.kinds = {VariableKind::continuous};
    p.objective = [](std::span<const double> x) { return x[0] * x[0]; };
    p.constraints = [](std::span<const double> x, std::span<double> g, std::span<double>) { g[0] = 1.0 - x[0]; };
    p.inequality_count = 1;
    p.best_known = 1.0;
    return p;
}

ProblemDefinition recording(const ProblemDefinition& base, std::shared_ptr<Recorder> rec)
{
    ProblemDefinition p = base;
    p.objective = [inner = base.objective, rec](std::span<const double> x) {
        rec->points.emplace_back(x.begin(), x.end());
        return inner(x);
    };
    return p;
}

ProblemDefinition random_problem(RandomSource& gen)
{
    const auto n = static_cast<std::size_t>(gen.uniform_int(1, 4));
    std::vector<double> lo(n), hi(n);
    std::vector<VariableKind> kinds(n, VariableKind::continuous);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = gen.uniform();
        if (r < 0.15) {
            lo[i] = hi[i] = std::round(gen.uniform(-5.0, 5.0));  // degenerate
        } else if (r < 0.35) {
            lo[i] = static_cast<double>(gen.uniform_int(-10, 0));
            hi[i] = lo[i] + static_cast<double>(gen.uniform_int(1, 20));
            kinds[i] = VariableKind::integer;
        } else {
            lo[i] = gen.uniform(-10.0, 5.0);
            hi[i] = lo[i] + gen.uniform(0.01, 10.0);
        }
    }

    std::vector<double> centre(n), weight(n), a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        centre[i] = gen.uniform(-8.0, 8.0);
        weight[i] = gen.uniform(0.1, 3.0);
        a[i] = gen.uniform(-1.0, 1.0);
        b[i] = gen.uniform(-1.0, 1.0);
    }
    const double shift = gen.uniform(-20.0, 20.0);
    const double ca = gen.uniform(-2.0, 2.0);
    const double cb = gen.uniform(-2.0, 2.0);
    const std::size_t ineq = static_cast<std::size_t>(gen.uniform_int(0, 2));
    const std::size_t eq = gen.uniform() < 0.3 ? 1 : 0;

    ProblemDefinition p;
    p.id = "random";
    p.name = "random quadratic";
    p.bounds = Bounds(lo, hi);
    p.kinds = kinds;
    p.objective = [=](std::span<const double> x) {
        double f = shift;
        for (std::size_t i = 0; i < n; ++i)
            f += weight[i] * (x[i] - centre[i]) * (x[i] - centre[i]);
        return f;
    };
    p.inequality_count = ineq;
    p.equality_count = eq;
    if (ineq + eq > 0) {
        p.constraints = [=](std::span<const double> x, std::span<double> g, std::span<double> h) {
            double sa = ca, sb = cb;
            for (std::size_t i = 0; i < n; ++i) {
                sa += a[i] * x[i];
                sb += b[i] * x[i];
            }
            if (!g.empty())
                g[0] = sa;
            if (g.size() > 1)
                g[1] = sb;
            if (!h.empty())
                h[0] = sa - sb;
        };
    }
    p.validate();
    return p;
}

double gear_error(int a, int b, int c, int d)
{
    // Required ratio 1/6.931; the train gives (b*d)/(a*c).
    const double e = 1.0 / 6.931 - (static_cast<double>(b) * d) / (static_cast<double>(a) * c);
    return e * e;
}

double gear_bruteforce_serial()
{
    double best = std::numeric_limits<double>::infinity();
    for (int a = 12; a <= 60; ++a)
        for (int b = 12; b <= 60; ++b)
            for (int c = 12; c <= 60; ++c)
                for (int d = 12; d <= 60; ++d)
                    best = std::min(best, gear_error(a, b, c, d));
    return best;
}

double gear_bruteforce_parallel()
{
    double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
    for (int a = 12; a <= 60; ++a)
        for (int b = 12; b <= 60; ++b)
            for (int c = 12; c <= 60; ++c)
                for (int d = 12; d <= 60; ++d)
                    best = std::min(best, gear_error(a, b, c, d));
    return best;
}

}  // namespace testsupport
