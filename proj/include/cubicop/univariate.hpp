#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace cubicop {

enum class FamilyKind { Legendre, ChebyshevT, Jacobi, Laguerre, Modified };

/// Real interval; `hi` may be +infinity for the Laguerre half-line.
struct Interval {
    double lo = -1.0;
    double hi = 1.0;

    bool bounded() const { return std::isfinite(hi); }
    bool contains_open(double x) const { return x > lo && x < hi; }
};

/// Which classical weight a family belongs to. Jacobi weights are
/// (1-x)^alpha (1+x)^beta on [-1,1]; Laguerre weights are the probability
/// normalized x^alpha e^{-x} / Gamma(alpha+1) on [0, inf), so that
/// h_n = binom(n+alpha, n).
struct FamilySpec {
    FamilyKind kind = FamilyKind::Legendre;
    double alpha = 0.0;
    double beta = 0.0;

    static FamilySpec legendre() { return {FamilyKind::Legendre, 0.0, 0.0}; }
    static FamilySpec chebyshev_t() { return {FamilyKind::ChebyshevT, -0.5, -0.5}; }
    static FamilySpec jacobi(double a, double b) { return {FamilyKind::Jacobi, a, b}; }
    static FamilySpec laguerre(double a) { return {FamilyKind::Laguerre, a, 0.0}; }
};

/// A univariate orthogonal family p_0, p_1, ... held as the orthonormal
/// three-term recurrence
///     x q_k = b_{k+1} q_{k+1} + a_k q_k + b_k q_{k-1},
/// together with the norms h_k of the exposed (classical) normalization
/// p_k = sign_k sqrt(h_k) q_k. Immutable after construction.
class OPFamily {
public:
    /// Raw constructor used by weight modification. `diag` holds a_0..a_cap,
    /// `offdiag` holds b_1..b_{cap+1}, `norms`/`signs` have length cap+1.
    OPFamily(FamilySpec spec, Interval support, double moment0, std::vector<double> diag,
             std::vector<double> offdiag, std::vector<double> norms, std::vector<double> signs);

    const FamilySpec& spec() const { return spec_; }
    FamilyKind kind() const { return spec_.kind; }
    int degree_cap() const { return static_cast<int>(diag_.size()) - 1; }
    Interval support() const { return support_; }
    /// Zeroth moment of the weight.
    double moment0() const { return moment0_; }
    double norm(int k) const;

    /// a_k, k = 0..cap
    double diag(int k) const;
    /// b_k coupling degrees k-1 and k, k = 1..cap+1
    double offdiag(int k) const;
    std::span<const double> diagonal() const { return diag_; }
    std::span<const double> offdiagonal() const { return offdiag_; }

    /// p_k(x); evaluation outside the support is allowed.
    double eval(int k, double x) const;
    /// p_0(x)..p_{out.size()-1}(x).
    void eval_all(double x, std::span<double> out) const;
    /// derivs[r][k] = d^r/dx^r p_k(x) for r = 0..order, k = 0..count-1.
    std::vector<std::vector<double>> eval_derivatives(double x, int count, int order) const;
    /// sum_k coeffs[k] p_k(x) by Clenshaw summation on the orthonormal recurrence.
    double clenshaw(std::span<const double> coeffs, double x) const;

    /// Same polynomials, weight multiplied by c > 0 (norms and moment scale by c).
    OPFamily scaled(double c) const;

    /// Factor s_k with p_k = s_k q_k.
    double orthonormal_factor(int k) const;

private:
    void check_degree(int k) const;

    FamilySpec spec_;
    Interval support_;
    double moment0_;
    std::vector<double> diag_;
    std::vector<double> offdiag_;
    std::vector<double> norms_;
    std::vector<double> signs_;
};

/// Nodes (ascending) and positive weights of the N-point Gauss rule.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

/// Recurrence coefficients and norms for degrees 0..degree_cap.
/// Throws ParameterDomainError for alpha/beta <= -1 or negative caps.
OPFamily build_family(const FamilySpec& spec, int degree_cap);

/// Golub-Welsch on the N x N truncated Jacobi matrix; 1 <= N <= degree_cap.
GaussRule gauss_rule(const OPFamily& family, int N);

/// Coefficients a_0..a_{N-1} of the degree N-1 interpolant through the
/// values at the N Gauss nodes, a_k = <f, p_k>_N / h_k.
std::vector<double> lagrange_interpolate(const OPFamily& family, int N, std::span<const double> values);
std::vector<double> lagrange_interpolate(const OPFamily& family, const GaussRule& rule,
                                         std::span<const double> values);

/// K_N(x,y) = sum_{k<N} p_k(x) p_k(y) / h_k.
double christoffel_darboux_kernel(const OPFamily& family, int N, double x, double y);

/// Maps Legendre coefficients c_k (of P_k) to the coefficients of the derivative
/// in the Jacobi(1,1) basis, using P_k' = (k+1)/2 P_{k-1}^{(1,1)}.
std::vector<double> legendre_derivative_coeffs(std::span<const double> c);

}  // namespace cubicop
