#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace cubicop {

/// Dense univariate polynomial with coefficients in ascending powers.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }
    /// x - r
    static Polynomial linear_root(double r) { return Polynomial({-r, 1.0}); }

    /// Degree after trimming exact zeros; the zero polynomial has degree -1.
    int degree() const;
    double leading() const;
    std::span<const double> coeffs() const { return coeffs_; }
    double coeff(int k) const;

    double operator()(double x) const;
    Polynomial derivative() const;

    /// p(offset + scale * t) as a polynomial in t.
    Polynomial compose_affine(double offset, double scale) const;

    /// Quotient of synthetic division by (x - r); the remainder is dropped.
    Polynomial deflate(double r) const;

    double max_abs_coeff() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(double s) const;

private:
    void trim();
    std::vector<double> coeffs_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

struct RealRoot {
    double value = 0.0;
    int multiplicity = 1;
};

/// Real roots (ascending, with multiplicities) of a polynomial of degree 1..3.
/// Cubics use the closed trigonometric/Cardano forms followed by Newton
/// polishing of simple roots; a discriminant below 64 eps relative to its
/// scale is treated as a repeated root.
std::vector<RealRoot> real_roots(const Polynomial& p);

}  // namespace cubicop
