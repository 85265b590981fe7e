#pragma once

#include <array>
#include <vector>

#include "cubicop/collocation.hpp"
#include "cubicop/curve_basis.hpp"

namespace cubicop {

/// Bessel example: g(t) = J_1(10 t + 20 (t^2 + eps^2)^{1/3}) lives on
/// y^2 = x^3 - eps^2 through x = (t^2 + eps^2)^{1/3}, y = t.
double bessel_target(double t, double eps);
CurveChart bessel_chart(double eps);

/// Errors at one sweep point, measured on 2001 uniform t in [-1, 1]. err_hp[m]
/// is the Hermite-Pade interpolant of degree m with the same number of samples
/// (m = 0 is the polynomial interpolant); NaN when the branch is lost.
struct ApproxRow {
    int n = 0;
    int samples = 0;  // 2N
    double err_curve = 0.0;
    std::array<double, 4> err_hp{};
};
ApproxRow approx_point(double eps, int n);
std::vector<ApproxRow> approx_sweep(double eps, int nmin, int nmax);

/// Example 1: y u' = 1 with u(-1, sqrt(phi(-1))) = 0 on phi = (x+1+eps)(x+2)(x+3),
/// so that u(1, sqrt(phi(1))) = int_{-1}^{1} dx / sqrt(phi).
CurveChart ellint_chart(double eps);
struct EllintResult {
    double value = 0.0;
    CollocationSolution solution;
};
EllintResult ellint_solve(double eps, int n, InnerMode mode = InnerMode::Bracket);

/// Example 2 with c1 = 10, c2 = 5 on phi = (1 - x^2)(2 - x).
constexpr double kExample2C1 = 10.0;
constexpr double kExample2C2 = 5.0;
CurveChart example2_chart();
CollocationProblem example2_problem(InnerMode mode, int n);
struct Ode2Point {
    int n = 0;
    int samples = 0;  // 2N
    double max_error = 0.0;  // over 2001 uniform x in [-1, 1], both branches
    double condition = 0.0;
    double residual = 0.0;
};
Ode2Point ode2_point(InnerMode mode, int n);

}  // namespace cubicop
