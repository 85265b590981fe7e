#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cubicop/polynomial.hpp"
#include "cubicop/univariate.hpp"

namespace cubicop {

/// Orthonormal polynomials for the weight g(x) w(x), built from a base family
/// for w and a positive polynomial multiplier g of degree <= 3.
struct ModifiedFamily {
    Polynomial multiplier;
    /// connection[k][j], j <= k: p_k(g w) = sum_j connection[k][j] q_j(w),
    /// with q_j the orthonormal base polynomials.
    std::vector<std::vector<double>> connection;
    /// Orthonormal (h_k = 1) family for g w; usable anywhere an OPFamily is.
    OPFamily family;
};

/// Leading (n+1)x(n+1) block of g(J), with J the orthonormal Jacobi matrix of
/// `base`; entry (k, j) equals <q_k, g q_j>_w exactly up to rounding.
/// Requires deg g <= 3 and n + floor(deg g / 2) <= base.degree_cap().
Eigen::MatrixXd moment_matrix(const OPFamily& base, const Polynomial& g, int n);

/// Lower Cholesky factor of a symmetric positive definite matrix with
/// bandwidth `band`. Throws PositivityError when a pivot is not positive.
Eigen::MatrixXd banded_cholesky(const Eigen::MatrixXd& a, int band);

/// Builds p_k(g w), k = 0..degree_cap. The new Jacobi matrix is L^{-1} J L
/// with L the Cholesky factor of g(J); only the local entries of L enter:
///   b'_{k+1} = b_{k+1} L_{k+1,k+1} / L_{k,k}
///   a'_k     = a_k + b_{k+1} L_{k+1,k} / L_{k,k} - b_k L_{k,k-1} / L_{k-1,k-1}.
/// g is split into factors positive on the support (one linear factor per
/// real root, plus the irreducible quadratic if any) and the step is applied
/// once per factor; on the half-line this is far better conditioned than a
/// single Cholesky factorization of g(J).
/// Requires degree_cap + deg g + 1 <= base.degree_cap().
/// Throws PositivityError when g is not positive on the open support.
ModifiedFamily modify(const OPFamily& base, const Polynomial& g, int degree_cap);

}  // namespace cubicop
