#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicop/polynomial.hpp"
#include "cubicop/univariate.hpp"

namespace cubicop {

/// A function on the curve, called as f(x, y) with y^2 = phi(x).
using CurveFunction = std::function<double(double, double)>;

/// OneComponent: one simple real root. TwoComponents: three distinct roots.
/// Touching: simple root below a double root (two components meeting at a node).
/// Cusp: triple root, as for y^2 = x^3; singular, one component.
enum class CurveCase { OneComponent, TwoComponents, Touching, Cusp };

std::string to_string(CurveCase c);

/// y^2 = phi(x) = a0 x^3 + a1 x^2 + a2 x + a3 with a0 > 0.
struct CubicCurve {
    std::array<double, 4> coeffs{};  // a0, a1, a2, a3
    Polynomial phi;                  // ascending powers
    std::vector<RealRoot> roots;     // ascending, of phi / a0
    CurveCase curve_case = CurveCase::OneComponent;
    std::vector<Interval> omega;     // {x : phi(x) > 0}
    /// -16 (4a^3 + 27b^2) for y^2 = a0 (x^3 + a x + b); set only when a1 == 0.
    std::optional<double> elliptic_discriminant;
    /// phi / (x - r) when r is the only real root and simple; empty otherwise.
    Polynomial quadratic_factor;

    /// phi(x) from the factored form, accurate relative to phi near the roots.
    double operator()(double x) const;
    double derivative(double x) const;
};

/// Roots, case and Omega. Throws DegeneracyError for a0 == 0 or an isolated
/// point (double root below the simple root), ParameterDomainError for a0 < 0.
CubicCurve classify(const std::array<double, 4>& coeffs);

/// Curve with three real roots given exactly (repeats allowed), so that phi is
/// evaluated without cancellation near them.
CubicCurve curve_from_roots(double a0, std::array<double, 3> roots);

/// Affine chart x = offset + scale * t from the canonical domain ([-1, 1] for
/// Jacobi-type weights, [0, inf) for Laguerre) onto the weight's support,
/// with phi(x(t)) = (1-t)^i (1+t)^j g(t) (Jacobi) or t^j g(t) (Laguerre), g
/// positive on the canonical domain. The second family p_n(phi w) is
/// classical exactly when deg g = 0.
struct CurveChart {
    CubicCurve curve;
    Interval support;  // in x
    double offset = 0.0;
    double scale = 1.0;
    FamilySpec weight;  // on the canonical variable t
    Polynomial phi_t;   // phi(offset + scale t)
    int i = 0;          // multiplicity of the root at t = 1 (Jacobi only)
    int j = 0;          // multiplicity of the root at t = -1, or at t = 0 (Laguerre)
    Polynomial cofactor;

    bool half_line() const { return weight.kind == FamilyKind::Laguerre; }
    int k() const { return cofactor.degree(); }
    double to_x(double t) const { return offset + scale * t; }
    double to_t(double x) const { return (x - offset) / scale; }
    Interval canonical() const;
};

/// Throws InvalidChartError when the support crosses a root or leaves Omega,
/// or when the weight does not match the support type.
CurveChart chart(const CubicCurve& curve, Interval support, const FamilySpec& weight);

/// (f_e(x), f_o(x)); requires phi(x) > 0, otherwise DomainError.
std::pair<double, double> even_odd_split(const CubicCurve& curve, const CurveFunction& f, double x);

/// Parsed form of {"phi": [a0,a1,a2,a3], "support": [lo, hi] | [lo, "inf"],
/// "weight": {"kind": ..., "alpha": ..., "beta": ...}}; support and weight
/// may be absent.
struct CurveSpec {
    std::array<double, 4> phi{};
    std::optional<Interval> support;
    std::optional<FamilySpec> weight;
};

/// Accepts either a JSON document or a path to a file holding one.
/// Throws std::invalid_argument with a one-line message on malformed input.
CurveSpec parse_curve_spec(const std::string& text_or_path);

/// kind is one of legendre, chebyshev, jacobi, laguerre.
FamilySpec parse_weight(const std::string& kind, double alpha, double beta);

}  // namespace cubicop
