#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cubicop/cubic_curve.hpp"
#include "cubicop/univariate.hpp"

namespace cubicop {

/// Angle: <f,g> = int [f g](x, y) + [f g](x, -y) w dx, second family p_n(phi w).
/// Bracket: [f,g] = int (f_e g_e + f_o g_o) w dx, second family p_n(w).
enum class InnerMode { Angle, Bracket };

/// A basis member is either p_k(w; x) or y q_k(x), with q = p(phi w) in
/// Angle mode and q = p(w) in Bracket mode.
struct BasisTerm {
    bool y_times = false;
    int degree = 0;
    bool operator==(const BasisTerm&) const = default;
};

/// Orthogonal basis Y_{n,i} on the curve over a chart. Families are built in
/// the canonical variable t and evaluated at t(x); all public arguments are
/// curve coordinates (x, y). Cheap to copy (shared immutable state).
class CurveBasis {
public:
    /// max_degree caps the univariate degree of both families.
    CurveBasis(const CurveChart& chart, InnerMode mode, int max_degree);

    const CurveChart& chart() const;
    InnerMode mode() const;
    int max_degree() const;
    const OPFamily& fam_x() const;
    const OPFamily& fam_y() const;

    /// Number of members of curve-degree n: 1, 2, then 3.
    static int members(int n);
    /// Univariate form of Y_{n,i}, i = 1..members(n). Throws IndexError.
    static BasisTerm term(int n, int i);
    /// Largest plain / y degree in Pi_n(curve): 3m, 3m-2 (n = 2m) and 3m+1, 3m (n = 2m+1).
    static int plain_cap(int n);
    static int y_cap(int n);

    /// H_{n,i}.
    double norm(int n, int i) const;
    double term_norm(const BasisTerm& t) const;

    double phi(double x) const { return chart().curve(x); }
    double eval(int n, int i, double x, double y) const;
    double eval_term(const BasisTerm& t, double x, double y) const;

    /// p_0..p_{p.size()-1} and q_0..q_{q.size()-1} at x.
    void eval_families(double x, std::span<double> p, std::span<double> q) const;

    /// Gauss rule of fam_x with nodes mapped to x; weights are for the
    /// canonical measure w(t) dt.
    GaussRule x_rule(int N) const;

private:
    struct State;
    std::shared_ptr<const State> state_;
};

/// sum_k a_k p_k(w; x) + y sum_k b_k q_k(x).
struct CurveExpansion {
    CurveBasis basis;
    std::vector<double> a;
    std::vector<double> b;

    double operator()(double x, double y) const;
    double even(double x) const;
    double odd(double x) const;
};

CurveExpansion basis_member(const CurveBasis& basis, int n, int i);

/// Continuous inner product of the basis mode via an `order`-point Gauss rule of w.
double inner_product(const CurveBasis& basis, const CurveFunction& f, const CurveFunction& g, int order);
/// Order chosen from the expansion lengths so that the rule is exact.
double inner_product(const CurveBasis& basis, const CurveExpansion& f, const CurveExpansion& g);

/// Coefficients of S_n(w; f): a covers plain degrees 0..plain_cap(n), b covers
/// y degrees 0..y_cap(n). `order` is the Gauss order used for the projections;
/// 0 picks the largest available.
CurveExpansion fourier_coeffs(const CurveBasis& basis, const CurveFunction& f, int n, int order = 0);

/// f-hat_{n,i} read off an expansion produced by fourier_coeffs.
double fourier_coefficient(const CurveExpansion& s, int n, int i);

/// Squared norm of an expansion under the basis inner product, from its
/// coefficients: sum a_k^2 H(p_k) + sum b_k^2 H(y q_k).
double expansion_norm2(const CurveExpansion& e);

/// Blocks of x Y_n = A_{n,1} Y_{n+1} + B_{n,1} Y_n + A_{n-1,1}^T Y_{n-1} and the
/// y analogue, for the orthonormalised basis, n = 0..n_max. Angle mode only.
struct JacobiOperators {
    std::vector<Eigen::MatrixXd> Ax, Bx, Ay, By;
};
JacobiOperators jacobi_operators(const CurveBasis& basis, int n_max);

/// Y-hat_n(x, y) as a vector of length members(n).
Eigen::VectorXd orthonormal_block(const CurveBasis& basis, int n, double x, double y);

}  // namespace cubicop
