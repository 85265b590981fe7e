#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "cubicop/cubic_curve.hpp"
#include "cubicop/errors.hpp"

using namespace cubicop;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void expect_poly(const Polynomial& p, std::vector<double> ascending, double tol) {
    for (std::size_t k = 0; k < ascending.size(); ++k) EXPECT_NEAR(p.coeff(static_cast<int>(k)), ascending[k], tol);
    EXPECT_LE(p.degree(), static_cast<int>(ascending.size()) - 1);
}

}  // namespace

TEST(Classify, FigureCurves) {
    const CubicCurve one = classify({1.0, 0.0, -1.0, 1.0});
    EXPECT_EQ(one.curve_case, CurveCase::OneComponent);
    ASSERT_EQ(one.omega.size(), 1u);
    EXPECT_FALSE(one.omega[0].bounded());
    ASSERT_TRUE(one.elliptic_discriminant.has_value());
    EXPECT_LT(*one.elliptic_discriminant, 0.0);

    const CubicCurve two = classify({1.0, 0.0, -3.0, 1.0});
    EXPECT_EQ(two.curve_case, CurveCase::TwoComponents);
    ASSERT_EQ(two.omega.size(), 2u);
    EXPECT_TRUE(two.omega[0].bounded());
    EXPECT_NEAR(*two.elliptic_discriminant, -16.0 * (4.0 * -27.0 + 27.0), 1e-12);
    EXPECT_GT(*two.elliptic_discriminant, 0.0);
    // x^3 - 3x + 1 has roots 2 cos(2 pi k / 9 + ...) ; largest is 2 cos(2 pi / 9)
    EXPECT_NEAR(two.roots.back().value, 2.0 * std::cos(2.0 * M_PI / 9.0), 1e-12);
}

TEST(Classify, TeardropIsTouching) {
    const CubicCurve c = classify({0.25, -0.25, -0.25, 0.25});
    EXPECT_EQ(c.curve_case, CurveCase::Touching);
    ASSERT_EQ(c.roots.size(), 2u);
    EXPECT_NEAR(c.roots[0].value, -1.0, 1e-12);
    EXPECT_EQ(c.roots[0].multiplicity, 1);
    EXPECT_NEAR(c.roots[1].value, 1.0, 1e-12);
    EXPECT_EQ(c.roots[1].multiplicity, 2);
    ASSERT_EQ(c.omega.size(), 2u);
    EXPECT_NEAR(c.omega[0].lo, -1.0, 1e-12);
    EXPECT_NEAR(c.omega[0].hi, 1.0, 1e-12);
    EXPECT_FALSE(c.elliptic_discriminant.has_value());
}

TEST(Classify, CuspAndErrors) {
    const CubicCurve cusp = classify({1.0, 0.0, 0.0, 0.0});
    EXPECT_EQ(cusp.curve_case, CurveCase::Cusp);
    EXPECT_EQ(*cusp.elliptic_discriminant, 0.0);
    EXPECT_THROW(classify({0.0, 1.0, 0.0, 0.0}), DegeneracyError);
    EXPECT_THROW(classify({-1.0, 0.0, 0.0, 1.0}), ParameterDomainError);
    // (x - 1)^2 (x - 2): the double root lies below the simple root
    EXPECT_THROW(classify({1.0, -4.0, 5.0, -2.0}), DegeneracyError);
}

TEST(Classify, DiscriminantAgreesWithRootCount) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = u(rng), b = u(rng);
        const CubicCurve c = classify({1.0, 0.0, a, b});
        const double d = *c.elliptic_discriminant;
        if (std::abs(d) < 1e-6) continue;
        EXPECT_EQ(c.curve_case == CurveCase::TwoComponents, d > 0.0) << "a=" << a << " b=" << b;
    }
}

TEST(Classify, RootResidualsAndPositivity) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::array<double, 4> a{std::abs(u(rng)) + 0.1, u(rng), u(rng), u(rng)};
        const CubicCurve c = classify(a);
        const double scale = std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2]), std::abs(a[3])});
        for (const RealRoot& r : c.roots) {
            const double z = r.value;
            EXPECT_LE(std::abs(c(z)), 1e-12 * scale * (1.0 + std::pow(std::abs(z), 3)));
        }
        for (const Interval& iv : c.omega) {
            const double hi = iv.bounded() ? iv.hi : iv.lo + 10.0;
            for (int k = 1; k < 20; ++k) {
                const double x = iv.lo + (hi - iv.lo) * k / 20.0;
                EXPECT_GT(c(x), 0.0);
            }
        }
    }
}

TEST(Chart, CuspWithLaguerreIsClassical) {
    const CurveChart ch = chart(classify({1.0, 0.0, 0.0, 0.0}), {0.0, kInf}, FamilySpec::laguerre(0.5));
    EXPECT_EQ(ch.j, 3);
    EXPECT_EQ(ch.i, 0);
    EXPECT_EQ(ch.k(), 0);
    expect_poly(ch.cofactor, {1.0}, 1e-14);
}

TEST(Chart, OneComponentEllipticOnHalfLine) {
    const CurveChart ch = chart(classify({1.0, 0.0, -2.0, 4.0}), {-2.0, kInf}, FamilySpec::laguerre(0.0));
    EXPECT_EQ(ch.j, 1);
    EXPECT_EQ(ch.k(), 2);
    // (u - 3)^2 + 1
    expect_poly(ch.cofactor, {10.0, -6.0, 1.0}, 1e-12);
}

TEST(Chart, EllipticSegment) {
    const CurveChart ch = chart(classify({1.0, 0.0, -2.0, 4.0}), {-2.0, 2.0}, FamilySpec::legendre());
    EXPECT_EQ(ch.j, 1);
    EXPECT_EQ(ch.i, 0);
    // 2 ((2u - 1)^2 + 1) = 8u^2 - 8u + 4
    expect_poly(ch.cofactor, {4.0, -8.0, 8.0}, 1e-12);
}

TEST(Chart, ClosedComponentOfTwoComponentCurve) {
    const CurveChart ch = chart(classify({1.0, 0.0, -4.0, 0.0}), {-2.0, 0.0}, FamilySpec::jacobi(0.5, -0.5));
    EXPECT_EQ(ch.i, 1);
    EXPECT_EQ(ch.j, 1);
    expect_poly(ch.cofactor, {3.0, -1.0}, 1e-12);
    const CurveChart open = chart(classify({1.0, 0.0, -4.0, 0.0}), {2.0, kInf}, FamilySpec::laguerre(0.0));
    EXPECT_EQ(open.j, 1);
    // (u + 4)(u + 2)
    expect_poly(open.cofactor, {8.0, 6.0, 1.0}, 1e-12);
}

TEST(Chart, TeardropEndpoints) {
    const CurveChart ch = chart(classify({0.25, -0.25, -0.25, 0.25}), {-1.0, 1.0}, FamilySpec::jacobi(0.0, 0.0));
    EXPECT_EQ(ch.i, 2);
    EXPECT_EQ(ch.j, 1);
    expect_poly(ch.cofactor, {0.25}, 1e-12);
}

TEST(Chart, InteriorWindowAndRoundTrip) {
    const CurveChart ch = chart(classify({1.0, 0.0, -3.0, 1.0}), {2.0, 5.0}, FamilySpec::legendre());
    EXPECT_EQ(ch.i + ch.j, 0);
    EXPECT_EQ(ch.k(), 3);
    for (double t = -1.0; t <= 1.0; t += 0.125) EXPECT_NEAR(ch.to_t(ch.to_x(t)), t, 1e-14);
    for (double t = -1.0; t <= 1.0; t += 0.25) EXPECT_NEAR(ch.phi_t(t), ch.curve(ch.to_x(t)), 1e-12);
}

TEST(Chart, Rejections) {
    const CubicCurve two = classify({1.0, 0.0, -4.0, 0.0});
    EXPECT_THROW(chart(two, {-1.0, 3.0}, FamilySpec::legendre()), InvalidChartError);
    EXPECT_THROW(chart(two, {0.5, 1.5}, FamilySpec::legendre()), InvalidChartError);
    EXPECT_THROW(chart(two, {-2.0, 0.0}, FamilySpec::laguerre(0.0)), InvalidChartError);
    EXPECT_THROW(chart(two, {2.0, kInf}, FamilySpec::legendre()), InvalidChartError);
    EXPECT_THROW(chart(two, {0.0, -2.0}, FamilySpec::legendre()), InvalidChartError);
}

TEST(EvenOddSplit, Examples) {
    const CubicCurve c = classify({0.25, -0.25, -0.25, 0.25});
    const auto g = [](double x) { return std::exp(x) - x * x; };
    for (double x : {-0.9, -0.3, 0.2, 0.7}) {
        auto [fe, fo] = even_odd_split(c, [&](double xx, double y) { return y * g(xx); }, x);
        EXPECT_NEAR(fe, 0.0, 1e-15);
        EXPECT_NEAR(fo, g(x), 1e-14);
        std::tie(fe, fo) = even_odd_split(c, [&](double xx, double) { return g(xx); }, x);
        EXPECT_NEAR(fe, g(x), 1e-15);
        EXPECT_NEAR(fo, 0.0, 1e-15);
        std::tie(fe, fo) = even_odd_split(c, [](double, double y) { return y * y; }, x);
        EXPECT_NEAR(fe, c(x), 1e-15);
        EXPECT_NEAR(fo, 0.0, 1e-14);
    }
    EXPECT_THROW(even_odd_split(c, [](double, double) { return 1.0; }, 1.0), DomainError);
    EXPECT_THROW(even_odd_split(c, [](double, double) { return 1.0; }, -2.0), DomainError);
}

TEST(EvenOddSplit, Reconstruction) {
    const CubicCurve c = classify({1.0, 0.0, -3.0, 1.0});
    const CurveFunction f = [](double x, double y) { return std::sin(x + 2.0 * y) * std::exp(0.3 * x * y); };
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(2.0, 4.0);
    for (int k = 0; k < 100; ++k) {
        const double x = u(rng), y = std::sqrt(c(x));
        const auto [fe, fo] = even_odd_split(c, f, x);
        const double scale = 1.0 + std::abs(f(x, y)) + std::abs(f(x, -y));
        EXPECT_NEAR(fe + y * fo, f(x, y), 1e-13 * scale);
        EXPECT_NEAR(fe - y * fo, f(x, -y), 1e-13 * scale);
    }
}

TEST(CurveSpecParsing, InlineAndFile) {
    const CurveSpec s = parse_curve_spec(
        R"({"phi": [1, 0, -2, 4], "support": [-2, "inf"], "weight": {"kind": "laguerre", "alpha": 0.5}})");
    EXPECT_EQ(s.phi[2], -2.0);
    ASSERT_TRUE(s.support.has_value());
    EXPECT_EQ(s.support->lo, -2.0);
    EXPECT_FALSE(s.support->bounded());
    ASSERT_TRUE(s.weight.has_value());
    EXPECT_EQ(s.weight->kind, FamilyKind::Laguerre);
    EXPECT_EQ(s.weight->alpha, 0.5);

    const std::string path = ::testing::TempDir() + "curve_spec_test.json";
    {
        std::ofstream out(path);
        out << R"({"phi": [0.25, -0.25, -0.25, 0.25], "support": [-1, 1], "weight": {"kind": "jacobi", "alpha": 1, "beta": 2}})";
    }
    const CurveSpec f = parse_curve_spec(path);
    EXPECT_EQ(f.support->hi, 1.0);
    EXPECT_EQ(f.weight->beta, 2.0);
    std::remove(path.c_str());

    const CurveSpec bare = parse_curve_spec(R"({"phi": [1, 0, 0, 0]})");
    EXPECT_FALSE(bare.support.has_value());
    EXPECT_FALSE(bare.weight.has_value());
}

TEST(CurveSpecParsing, Malformed) {
    EXPECT_THROW(parse_curve_spec("{"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec(R"({"phi": [1, 2, 3]})"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec(R"({"phi": [1, 2, 3, "a"]})"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec(R"({"phi": [1, 0, 0, 0], "support": [0, "sky"]})"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec(R"({"phi": [1, 0, 0, 0], "weight": {"kind": "hermite"}})"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec(R"({"phi": [1, 0, 0, 0], "weight": {"kind": "jacobi", "alpha": -2}})"),
                 ParameterDomainError);
    EXPECT_THROW(parse_curve_spec("/nonexistent/curve.json"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec("   "), std::invalid_argument);
}

TEST(CurveFromRoots, MatchesClassifyAndCase) {
    const CubicCurve c = curve_from_roots(2.0, {1.0, -1.0, 3.0});
    const CubicCurve d = classify({2.0, -6.0, -2.0, 6.0});
    EXPECT_EQ(c.curve_case, CurveCase::TwoComponents);
    ASSERT_EQ(c.roots.size(), 3u);
    EXPECT_EQ(c.roots[0].value, -1.0);
    EXPECT_EQ(c.roots[2].value, 3.0);
    for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(c.coeffs[static_cast<std::size_t>(k)], d.coeffs[static_cast<std::size_t>(k)]);
    for (double x : {-2.0, 0.0, 0.5, 2.0, 4.0}) EXPECT_NEAR(c(x), d(x), 1e-12 * (1.0 + std::abs(d(x))));

    const CubicCurve t = curve_from_roots(1.0, {-1.0, 1.0, 1.0});
    EXPECT_EQ(t.curve_case, CurveCase::Touching);
    EXPECT_EQ(curve_from_roots(1.0, {0.0, 0.0, 0.0}).curve_case, CurveCase::Cusp);
}

TEST(CurveFromRoots, RelativeAccuracyNearRoot) {
    const double eps = 1e-9;
    const CubicCurve c = curve_from_roots(1.0, {-1.0 - eps, -2.0, -3.0});
    // phi(-1) = (-1 - r)(1)(2) with -1 - r exactly representable here
    const double gap = -1.0 - (-1.0 - eps);
    EXPECT_NEAR(c(-1.0), 2.0 * gap, 1e-15 * gap);
}

TEST(FactoredEvaluation, OneRealRoot) {
    // (x - 1)(x^2 + x + 1) = x^3 - 1
    const CubicCurve c = classify({1.0, 0.0, 0.0, -1.0});
    const double x = 1.0 + 1e-10;
    const double exact = std::expm1(3.0 * std::log1p(1e-10));
    EXPECT_NEAR(c(x), exact, 1e-6 * exact);
}
