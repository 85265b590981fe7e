#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cubicop/curve_basis.hpp"

namespace cubicop {

/// N_n: 3m for n = 2m, 3m + 1 for n = 2m + 1.
int gauss_order_for(int n);

/// I_n(f) = sum_k lambda_k [f(x_k, y_k) + f(x_k, -y_k)], exact on Pi_{2n-1}(curve).
/// Weights are those of the canonical measure w(t) dt.
struct CurveQuadRule {
    int n = 0;
    int N = 0;
    std::vector<double> x;  // ascending
    std::vector<double> y;  // sqrt(phi(x)) > 0
    std::vector<double> weights;
    GaussRule base;  // in the canonical variable

    double integrate(const CurveFunction& f) const;
    /// The 2N nodes: (x_k, +y_k) for all k, then (x_k, -y_k).
    std::vector<std::pair<double, double>> points() const;
};

CurveQuadRule curve_quadrature(const CurveBasis& basis, int n);

/// f at rule.points().
std::vector<double> sample(const CurveQuadRule& rule, const CurveFunction& f);

/// L_N(w; f_e) + y L_N(w; f_o) with coefficients from the discrete inner
/// product, O(N^2). Bracket mode only; samples ordered as rule.points().
CurveExpansion curve_interpolate(const CurveBasis& basis, int n, std::span<const double> samples);

struct AngleInterpolant {
    CurveExpansion expansion;
    double rcond = 0.0;  // reciprocal condition estimate of the 2N x 2N system
    bool ill_conditioned = false;
};

/// Same interpolant in the Angle basis, from the 2N x 2N system with columns
/// p_k(w) and y p_k(phi w), k < N, solved by LU with partial pivoting.
AngleInterpolant curve_interpolate_angle(const CurveBasis& basis, int n, std::span<const double> samples);

/// GaussAngle: <f, g>_{N, curve}; GaussBracket: [f, g]_N.
enum class DiscreteInner { GaussAngle, GaussBracket };
double discrete_inner(const CurveBasis& basis, int n, const CurveFunction& f, const CurveFunction& g,
                      DiscreteInner which);

}  // namespace cubicop
