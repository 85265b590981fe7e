#pragma once

#include <span>
#include <vector>

namespace cubicop {

/// Eigenvalues (ascending) of a symmetric tridiagonal matrix together with the
/// first component of each normalized eigenvector, which is all Golub-Welsch needs.
struct TridiagonalEigen {
    std::vector<double> values;
    std::vector<double> first_components;
};

/// Implicit-shift QL iteration. `offdiag` has length diag.size() - 1.
/// Throws NumericalError if an eigenvalue fails to converge in 60 sweeps.
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag,
                                             std::span<const double> offdiag);

}  // namespace cubicop
