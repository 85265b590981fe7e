#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cubicop/collocation.hpp"
#include "cubicop/curve_quadrature.hpp"
#include "cubicop/errors.hpp"

using namespace cubicop;

namespace {

CurveChart teardrop() {
    return chart(classify({0.25, -0.25, -0.25, 0.25}), {-1.0, 1.0}, FamilySpec::jacobi(0.0, 0.0));
}
CurveChart elliptic_segment() {
    return chart(classify({1.0, 0.0, -2.0, 4.0}), {-2.0, 2.0}, FamilySpec::legendre());
}
// (1 - x^2)(2 - x)
CurveChart example2_chart() { return chart(classify({1.0, -2.0, -1.0, 2.0}), {-1.0, 1.0}, FamilySpec::legendre()); }

// u = y as an expansion: y q_0 / q_0
CurveExpansion pure_y(const CurveBasis& basis) {
    return CurveExpansion{basis, {}, {1.0 / basis.fam_y().eval(0, 0.0)}};
}

// u along the upper branch as a function of x
double upper(const CurveFunction& u, const CurveChart& ch, double x) { return u(x, std::sqrt(ch.curve(x))); }

double central_difference(const CurveFunction& u, const CurveChart& ch, double x, double h) {
    return (upper(u, ch, x + h) - upper(u, ch, x - h)) / (2.0 * h);
}

}  // namespace

TEST(Differentiate, LinearX) {
    const CurveBasis basis(elliptic_segment(), InnerMode::Angle, 20);
    const CurveExpansion u = fourier_coeffs(basis, [](double x, double) { return x; }, 2);
    const CurveFunction du = differentiate(u);
    for (double x : {-1.5, 0.0, 0.7, 1.9}) {
        const double y = std::sqrt(basis.phi(x));
        EXPECT_NEAR(du(x, y), 1.0, 1e-13);
        EXPECT_NEAR(du(x, -y), 1.0, 1e-13);
        EXPECT_NEAR(differentiate(u, 2)(x, y), 0.0, 1e-12);
    }
}

TEST(Differentiate, PureYOnTeardropAgainstFiniteDifferences) {
    const CurveChart ch = teardrop();
    for (InnerMode mode : {InnerMode::Angle, InnerMode::Bracket}) {
        const CurveBasis basis(ch, mode, 20);
        const CurveExpansion u = pure_y(basis);
        const CurveFunction du = differentiate(u);
        for (double x : {-0.6, 0.0, 0.45}) {
            const double y = std::sqrt(ch.curve(x));
            EXPECT_NEAR(u(x, y), y, 1e-14);
            EXPECT_NEAR(du(x, y), central_difference(u, ch, x, 1e-5), 1e-8) << "x=" << x;
            EXPECT_NEAR(du(x, -y), -du(x, y), 1e-14);
        }
        // phi = (1-x)^2 (1+x) / 4, phi'(0) = -1/4, y(0) = 1/2
        EXPECT_NEAR(du(0.0, 0.5), -0.25, 1e-14);
    }
}

TEST(Differentiate, HigherOrdersAgainstFiniteDifferences) {
    const CurveChart ch = elliptic_segment();
    const CurveBasis basis(ch, InnerMode::Angle, 30);
    // x^2 + x y + y^3 = x^2 + y (x + phi)
    const CurveFunction f = [](double x, double y) { return x * x + x * y + y * y * y; };
    const CurveExpansion u = fourier_coeffs(basis, f, 6);
    for (double x : {-1.2, 0.3, 1.4}) {
        const double y = std::sqrt(ch.curve(x));
        EXPECT_NEAR(u(x, y), f(x, y), 1e-12);
        const double h = 1e-3;
        const double d2 = (upper(f, ch, x + h) - 2.0 * upper(f, ch, x) + upper(f, ch, x - h)) / (h * h);
        const double d3 = (upper(f, ch, x + 2 * h) - 2.0 * upper(f, ch, x + h) + 2.0 * upper(f, ch, x - h) -
                           upper(f, ch, x - 2 * h)) /
                          (2.0 * h * h * h);
        EXPECT_NEAR(differentiate(u, 1)(x, y), central_difference(f, ch, x, 1e-5), 1e-7);
        EXPECT_NEAR(differentiate(u, 2)(x, y), d2, 1e-4 * (1.0 + std::abs(d2)));
        EXPECT_NEAR(differentiate(u, 3)(x, y), d3, 1e-3 * (1.0 + std::abs(d3)));
    }
}

TEST(Differentiate, YSquaredIsPhiPrime) {
    const CurveChart ch = teardrop();
    const CurveBasis basis(ch, InnerMode::Bracket, 20);
    const CurveExpansion u = fourier_coeffs(basis, [](double, double y) { return y * y; }, 4);
    const Polynomial dphi = ch.curve.phi.derivative();
    for (double x : {-0.9, -0.2, 0.5, 0.99}) {
        const double y = std::sqrt(ch.curve(x));
        EXPECT_NEAR(differentiate(u)(x, y), dphi(x), 1e-13);
    }
}

TEST(Differentiate, RootIsDomainError) {
    const CurveChart ch = teardrop();
    const CurveBasis basis(ch, InnerMode::Angle, 10);
    const CurveFunction du = differentiate(pure_y(basis));
    EXPECT_THROW(du(-1.0, 0.0), DomainError);
    EXPECT_THROW(du(1.0, 0.0), DomainError);
    EXPECT_THROW(column_derivatives(basis, 3, 1, 1.0, 0.0), DomainError);
    EXPECT_NO_THROW(column_derivatives(basis, 3, 0, 1.0, 0.0));
}

TEST(ColumnDerivatives, MatchesDifferentiate) {
    const CurveChart ch = teardrop();
    const CurveBasis basis(ch, InnerMode::Angle, 20);
    const int N = 5;
    const double x = 0.3, y = -std::sqrt(ch.curve(0.3));
    const Eigen::MatrixXd D = column_derivatives(basis, N, 2, x, y);
    for (int k = 0; k < 2 * N; ++k) {
        CurveExpansion e{basis, std::vector<double>(N, 0.0), std::vector<double>(N, 0.0)};
        (k < N ? e.a[static_cast<std::size_t>(k)] : e.b[static_cast<std::size_t>(k - N)]) = 1.0;
        for (int r = 0; r <= 2; ++r) EXPECT_NEAR(D(r, k), differentiate(e, r)(x, y), 1e-11 * (1.0 + std::abs(D(r, k))));
    }
}

TEST(Solve, ZeroProblem) {
    const CurveBasis basis(teardrop(), InnerMode::Angle, 20);
    const CollocationProblem p{basis, {[](double, double) { return 1.0; }}, [](double, double) { return 0.0; }, {}};
    const CollocationSolution s = solve(p, 5);
    EXPECT_EQ(s.N, gauss_order_for(5));
    EXPECT_EQ(s.expansion.a.size(), static_cast<std::size_t>(s.N));
    EXPECT_EQ(s.expansion.b.size(), static_cast<std::size_t>(s.N));
    for (double c : s.expansion.a) EXPECT_EQ(c, 0.0);
    for (double c : s.expansion.b) EXPECT_EQ(c, 0.0);
}

TEST(Solve, ManufacturedSolution) {
    // u* in the solution space; u'' + x u' + (2 + y) u = g with data from u*
    const CurveChart ch = elliptic_segment();
    for (InnerMode mode : {InnerMode::Angle, InnerMode::Bracket}) {
        const CurveBasis basis(ch, mode, 40);
        const int n = 6, N = gauss_order_for(n);
        CurveExpansion exact{basis, std::vector<double>(N), std::vector<double>(N)};
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        for (double& c : exact.a) c = U(rng);
        for (double& c : exact.b) c = U(rng);
        const std::vector<CurveFunction> coeffs = {[](double, double y) { return 2.0 + y; },
                                                   [](double x, double) { return x; },
                                                   [](double, double) { return 1.0; }};
        const CurveFunction u0 = exact, u1 = differentiate(exact, 1), u2 = differentiate(exact, 2);
        const CurveFunction g = [&](double x, double y) { return u2(x, y) + x * u1(x, y) + (2.0 + y) * u0(x, y); };
        const double ya = -std::sqrt(ch.curve(-1.9)), yb = std::sqrt(ch.curve(1.9));
        const CollocationProblem p{basis, coeffs, g, {{-1.9, ya, exact(-1.9, ya)}, {1.9, yb, exact(1.9, yb)}}};
        const CollocationSolution s = solve(p, n);
        for (int k = 0; k < N; ++k) {
            EXPECT_NEAR(s.expansion.a[static_cast<std::size_t>(k)], exact.a[static_cast<std::size_t>(k)], 1e-9);
            EXPECT_NEAR(s.expansion.b[static_cast<std::size_t>(k)], exact.b[static_cast<std::size_t>(k)], 1e-9);
        }
        EXPECT_LT(s.residual, 1e-10);
        EXPECT_GT(s.condition, 1.0);
    }
}

TEST(Solve, BoundaryRowsReplaceNearestNodes) {
    // u' = 0 with u(x_b, y_b) = 3 gives the constant 3 wherever the row lands
    const CurveChart ch = teardrop();
    const CurveBasis basis(ch, InnerMode::Angle, 20);
    const CollocationProblem p{basis,
                               {[](double, double) { return 0.0; }, [](double, double) { return 1.0; }},
                               [](double, double) { return 0.0; },
                               {{-1.0, 0.0, 3.0}}};
    const CollocationSolution s = solve(p, 4);
    for (double x : {-0.8, 0.1, 0.9}) {
        const double y = std::sqrt(ch.curve(x));
        EXPECT_NEAR(s.expansion(x, y), 3.0, 1e-11);
        EXPECT_NEAR(s.expansion(x, -y), 3.0, 1e-11);
    }
}

TEST(Solve, SingularSystemIsSolveError) {
    // u' = 0 without boundary data leaves constants free
    const CurveBasis basis(teardrop(), InnerMode::Angle, 20);
    const CollocationProblem p{basis,
                               {[](double, double) { return 0.0; }, [](double, double) { return 1.0; }},
                               [](double, double) { return 0.0; },
                               {}};
    try {
        solve(p, 4);
        FAIL() << "expected SolveError";
    } catch (const SolveError& e) {
        EXPECT_GT(e.condition(), 1e15);
    }
    EXPECT_THROW(solve(CollocationProblem{basis, {}, [](double, double) { return 0.0; }, {}}, 4), ParameterDomainError);
}

TEST(Example2, CoefficientIdentities) {
    const CurveChart ch = example2_chart();
    const double c1 = 10.0, c2 = 5.0;
    const Example2Coefficients e = ode_coefficients_example2(ch, c1, c2);
    const Polynomial dphi = ch.curve.phi.derivative();
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-0.999, 0.999);
    for (int k = 0; k < 200; ++k) {
        const double x = U(rng), sgn = k % 2 == 0 ? 1.0 : -1.0;
        const double phi = ch.curve(x), y = sgn * std::sqrt(phi);
        const double a2 = c1 + c2 * y + c2 * x * dphi(x) / (2.0 * y);
        EXPECT_NEAR(e.a2(x, y), y * phi * a2, 1e-12 * (1.0 + std::abs(y * phi * a2)));
        EXPECT_NEAR(e.a0(x, y), y * phi * a2 * a2 * a2, 1e-10 * (1.0 + std::abs(y * phi * a2 * a2 * a2)));
        EXPECT_EQ(e.g(x, y), 0.0);

        // plug-in residual of the exact solution, with u' and u'' from theta
        const double th = c1 * x + c2 * x * y;
        // a_1 = -da_2/dx by a complex step along the branch
        using C = std::complex<double>;
        const auto a2_at = [&](C z) {
            const C f = (1.0 - z * z) * (2.0 - z), df = 3.0 * z * z - 4.0 * z - 1.0;
            const C yy = sgn * std::sqrt(f);
            return c1 + c2 * yy + c2 * z * df / (2.0 * yy);
        };
        const double h = 1e-30;
        const double da2 = a2_at(C(x, h)).imag() / h;
        EXPECT_NEAR(e.a1(x, y), -y * phi * da2, 1e-10 * (1.0 + std::abs(y * phi * da2)));
        const double u = std::sin(th), du = std::cos(th) * a2, d2u = -std::sin(th) * a2 * a2 + std::cos(th) * da2;
        const double scale = std::abs(e.a2(x, y) * d2u) + std::abs(e.a1(x, y) * du) + std::abs(e.a0(x, y) * u);
        EXPECT_LE(std::abs(e.a2(x, y) * d2u + e.a1(x, y) * du + e.a0(x, y) * u), 1e-8 * (1.0 + scale));
    }
}

TEST(Example2, CoefficientMembership) {
    // interpolation on Pi_n reproduces members of Pi_n
    const CurveChart ch = example2_chart();
    const Example2Coefficients e = ode_coefficients_example2(ch, 10.0, 5.0);
    const CurveBasis basis(ch, InnerMode::Bracket, 40);
    const std::pair<CurveFunction, int> cases[] = {{e.a2, 6}, {e.a1, 5}, {e.a0, 9}};
    for (const auto& [f, n] : cases) {
        const CurveQuadRule rule = curve_quadrature(basis, n);
        const CurveExpansion interp = curve_interpolate(basis, n, sample(rule, f));
        double worst = 0.0, scale = 0.0;
        for (double x = -0.99; x < 1.0; x += 0.0725) {
            const double y = std::sqrt(ch.curve(x));
            for (double s : {y, -y}) {
                worst = std::max(worst, std::abs(interp(x, s) - f(x, s)));
                scale = std::max(scale, std::abs(f(x, s)));
            }
        }
        EXPECT_LE(worst, 1e-12 * scale) << "n=" << n;
    }
}

TEST(Example2, SolverAccuracyAndModeAgreement) {
    const CurveChart ch = example2_chart();
    const double c1 = 10.0, c2 = 5.0;
    const Example2Coefficients e = ode_coefficients_example2(ch, c1, c2);
    const auto exact = [&](double x, double y) { return std::sin(c1 * x + c2 * x * y); };
    std::vector<CollocationSolution> sols;
    for (InnerMode mode : {InnerMode::Bracket, InnerMode::Angle}) {
        const CurveBasis basis(ch, mode, 80);
        const CollocationProblem p{basis, {e.a0, e.a1, e.a2}, e.g, {{-1.0, 0.0, std::sin(-c1)}, {1.0, 0.0, std::sin(c1)}}};
        sols.push_back(solve(p, 40));  // 2N = 120
        EXPECT_EQ(2 * sols.back().N, 120);
        EXPECT_LE(sols.back().residual, 1e-8 * 1e3);
        double err = 0.0;
        for (int k = 0; k <= 400; ++k) {
            const double x = -1.0 + k / 200.0, y = std::sqrt(std::max(0.0, ch.curve(x)));
            err = std::max({err, std::abs(sols.back().expansion(x, y) - exact(x, y)),
                            std::abs(sols.back().expansion(x, -y) - exact(x, -y))});
        }
        EXPECT_LE(err, 1e-8);
    }
    const double tol = 10.0 * std::max(sols[0].residual, sols[1].residual);
    for (double x : {-0.7, 0.2, 0.8}) {
        const double y = std::sqrt(ch.curve(x));
        EXPECT_LE(std::abs(sols[0].expansion(x, y) - sols[1].expansion(x, y)), std::max(tol, 1e-8));
    }
}
