#pragma once

#include <span>
#include <vector>

#include "cubicop/univariate.hpp"

namespace cubicop {

/// N Chebyshev-Gauss nodes mapped to [lo, hi] (ascending) and their weights pi / N.
struct HPGrid {
    Interval domain;
    std::vector<double> nodes;
    std::vector<double> weights;
};
HPGrid hp_grid(Interval domain, int N);

/// Diagonal Hermite-Pade approximant: sum_j p_j(x) psi^j = 0 with deg p_j <= d.
/// polys[j][k] are coefficients of p_j on the discretely orthonormal basis,
/// which on Chebyshev-Gauss nodes is the normalised T_k of the mapped variable.
struct HPApproximant {
    int m = 1;
    int d = 0;
    HPGrid grid;
    std::vector<std::vector<double>> polys;
    double residual = 0.0;
    bool degenerate = false;  // more than one vanishing singular value

    /// p_j(x), j = 0..m.
    std::vector<double> coefficients_at(double x) const;
};

/// Orthonormal basis values q_0..q_{out.size()-1} at x for the grid's inner product.
void hp_basis(const HPGrid& grid, double x, std::span<double> out);

/// Minimises ||p_0 + p_1 f + ... + p_m f^m||_N over unit coefficient vectors by SVD.
/// Needs m >= 1, d >= 0 and N >= m(d+1) + d.
HPApproximant hp_fit(const HPGrid& grid, std::span<const double> values, int m, int d);

/// Discrete least-squares polynomial of degree d, stored as m = 1 with p_1
/// constant so that psi = -p_0 / p_1; d = N - 1 interpolates.
HPApproximant hp_fit_polynomial(const HPGrid& grid, std::span<const double> values, int d);

/// A root psi(x) near `guess`: Newton to 1e-13, at most 50 steps, then the
/// companion-matrix roots (dropping vanishing leading coefficients) and the
/// real root closest to guess. Throws BranchLossError if no root is real.
double hp_eval(const HPApproximant& approx, double x, double guess);

/// Continuation along xs: each point starts from the previous value.
std::vector<double> hp_eval_sweep(const HPApproximant& approx, std::span<const double> xs, double first_guess);

}  // namespace cubicop
