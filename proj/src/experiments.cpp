#include "cubicop/experiments.hpp"

#include <cmath>
#include <limits>

#include "cubicop/curve_quadrature.hpp"
#include "cubicop/errors.hpp"
#include "cubicop/hermite_pade.hpp"

namespace cubicop {

namespace {

constexpr int kGridPoints = 2001;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> uniform_grid(double lo, double hi) {
    std::vector<double> g(kGridPoints);
    for (int k = 0; k < kGridPoints; ++k) g[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (kGridPoints - 1);
    g.back() = hi;
    return g;
}

double bessel_x(double t, double eps) { return std::cbrt(t * t + eps * eps); }

// max error of a Hermite-Pade interpolant with `samples` nodes, NaN on branch loss
double hp_error(double eps, int samples, int m, const std::vector<double>& ts, const std::vector<double>& exact) {
    const HPGrid grid = hp_grid({-1.0, 1.0}, samples);
    std::vector<double> v;
    for (double t : grid.nodes) v.push_back(bessel_target(t, eps));
    const HPApproximant poly = hp_fit_polynomial(grid, v, samples - 1);
    if (m == 0) {
        double err = 0.0;
        for (std::size_t k = 0; k < ts.size(); ++k) err = std::max(err, std::abs(hp_eval(poly, ts[k], 0.0) - exact[k]));
        return err;
    }
    if (samples < m) return kNaN;
    const int d = (samples - m) / (m + 1);
    try {
        const HPApproximant h = hp_fit(grid, v, m, d);
        const auto vals = hp_eval_sweep(h, ts, hp_eval(poly, ts.front(), 0.0));
        double err = 0.0;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            if (!std::isfinite(vals[k])) return kNaN;
            err = std::max(err, std::abs(vals[k] - exact[k]));
        }
        return err;
    } catch (const BranchLossError&) {
        return kNaN;
    }
}

}  // namespace

double bessel_target(double t, double eps) {
    const double z = 10.0 * t + 20.0 * bessel_x(t, eps);
    // J_1 is odd
    return z < 0.0 ? -std::cyl_bessel_j(1.0, -z) : std::cyl_bessel_j(1.0, z);
}

CurveChart bessel_chart(double eps) {
    if (!(eps >= 0.0)) throw ParameterDomainError("bessel_chart: eps must be >= 0");
    const double e2 = eps * eps;
    return chart(classify({1.0, 0.0, 0.0, -e2}), {std::cbrt(e2), std::cbrt(1.0 + e2)}, FamilySpec::chebyshev_t());
}

ApproxRow approx_point(double eps, int n) {
    const CurveChart ch = bessel_chart(eps);
    const int N = gauss_order_for(n);
    const CurveBasis basis(ch, InnerMode::Bracket, N + 4);
    const CurveQuadRule rule = curve_quadrature(basis, n);
    // nodes are (x, +-y) and the target is a function of t = y
    const CurveFunction f = [eps](double, double y) { return bessel_target(y, eps); };
    const CurveExpansion interp = curve_interpolate(basis, n, sample(rule, f));

    const std::vector<double> ts = uniform_grid(-1.0, 1.0);
    std::vector<double> exact;
    for (double t : ts) exact.push_back(bessel_target(t, eps));

    ApproxRow row;
    row.n = n;
    row.samples = 2 * N;
    for (std::size_t k = 0; k < ts.size(); ++k)
        row.err_curve = std::max(row.err_curve, std::abs(interp(bessel_x(ts[k], eps), ts[k]) - exact[k]));
    for (int m = 0; m <= 3; ++m) row.err_hp[static_cast<std::size_t>(m)] = hp_error(eps, row.samples, m, ts, exact);
    return row;
}

std::vector<ApproxRow> approx_sweep(double eps, int nmin, int nmax) {
    std::vector<ApproxRow> rows;
    for (int n = std::max(nmin, 1); n <= nmax; ++n) rows.push_back(approx_point(eps, n));
    return rows;
}

CurveChart ellint_chart(double eps) {
    if (!(eps >= 0.0)) throw ParameterDomainError("ellint_chart: eps must be >= 0");
    // (x + 1 + eps)(x + 2)(x + 3), from its roots so that phi(-1) = 2 eps keeps full relative accuracy
    return chart(curve_from_roots(1.0, {-1.0 - eps, -2.0, -3.0}), {-1.0, 1.0}, FamilySpec::legendre());
}

EllintResult ellint_solve(double eps, int n, InnerMode mode) {
    const CurveChart ch = ellint_chart(eps);
    const CurveBasis basis(ch, mode, gauss_order_for(n) + 4);
    const CollocationProblem p{basis,
                               {[](double, double) { return 0.0; }, [](double, double y) { return y; }},
                               [](double, double) { return 1.0; },
                               {{-1.0, std::sqrt(ch.curve(-1.0)), 0.0}}};
    CollocationSolution s = solve(p, n);
    const double value = s.expansion(1.0, std::sqrt(ch.curve(1.0)));
    return EllintResult{value, std::move(s)};
}

CurveChart example2_chart() {
    return chart(classify({1.0, -2.0, -1.0, 2.0}), {-1.0, 1.0}, FamilySpec::legendre());
}

CollocationProblem example2_problem(InnerMode mode, int n) {
    const CurveChart ch = example2_chart();
    const Example2Coefficients e = ode_coefficients_example2(ch, kExample2C1, kExample2C2);
    const CurveBasis basis(ch, mode, gauss_order_for(n) + 4);
    return CollocationProblem{basis,
                              {e.a0, e.a1, e.a2},
                              e.g,
                              {{-1.0, 0.0, std::sin(-kExample2C1)}, {1.0, 0.0, std::sin(kExample2C1)}}};
}

Ode2Point ode2_point(InnerMode mode, int n) {
    const CollocationProblem p = example2_problem(mode, n);
    const CollocationSolution s = solve(p, n);
    const CurveChart& ch = p.basis.chart();
    Ode2Point r{n, 2 * s.N, 0.0, s.condition, s.residual};
    for (double x : uniform_grid(-1.0, 1.0)) {
        const double y = std::sqrt(std::max(0.0, ch.curve(x)));
        for (double yy : {y, -y}) {
            const double exact = std::sin(kExample2C1 * x + kExample2C2 * x * yy);
            r.max_error = std::max(r.max_error, std::abs(s.expansion(x, yy) - exact));
        }
    }
    return r;
}

}  // namespace cubicop
