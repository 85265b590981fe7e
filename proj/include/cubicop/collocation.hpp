#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cubicop/curve_basis.hpp"

namespace cubicop {

/// d^order/dx^order of u along the curve, with dy/dx = phi'/(2y):
///   d^r [y q] = y sum_i C(r, i) P_{r-i} / phi^{r-i} q^{(i)},
///   P_0 = 1, P_{j+1} = P_j' phi + (1/2 - j) phi' P_j.
/// The returned evaluator throws DomainError where phi(x) <= 0.
CurveFunction differentiate(const CurveExpansion& u, int order = 1);

/// Values of the 2N columns p_0..p_{N-1}, y q_0..y q_{N-1} and their x-derivatives
/// at (x, y): row r holds d^r/dx^r, r = 0..order.
Eigen::MatrixXd column_derivatives(const CurveBasis& basis, int N, int order, double x, double y);

/// Dirichlet condition u(x, y) = value.
struct BoundaryCondition {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
};

/// sum_lambda a_lambda(x, y) d^lambda u / dx^lambda = g(x, y) on the curve.
struct CollocationProblem {
    CurveBasis basis;
    std::vector<CurveFunction> coefficients;  // a_0 .. a_m
    CurveFunction rhs;
    std::vector<BoundaryCondition> boundary;
    /// Scale every row by its largest entry before factorising.
    bool equilibrate = false;
};

struct CollocationSolution {
    CurveExpansion expansion;
    double condition = 0.0;  // 1 / rcond of the LU factorisation
    double residual = 0.0;   // max |A c - rhs| over all rows
    int N = 0;
};

/// Collocates at the 2N mirrored Gauss nodes of curve degree n. Each boundary
/// row replaces the row of the nearest unused node in the (x, y) plane, +y
/// first on ties. Throws SolveError when the condition estimate exceeds 1e15.
CollocationSolution solve(const CollocationProblem& problem, int n);

/// a_2, a_1, a_0 and g of u = sin(c1 x + c2 x y), each multiplied by y phi so
/// that the first three are polynomials on the curve.
struct Example2Coefficients {
    CurveFunction a2, a1, a0, g;
};
Example2Coefficients ode_coefficients_example2(const CurveChart& chart, double c1, double c2);

}  // namespace cubicop
