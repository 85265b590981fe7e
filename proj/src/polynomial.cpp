#include "cubicop/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cubicop/errors.hpp"

namespace cubicop {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

double Polynomial::leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

double Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(double offset, double scale) const {
    // Horner in polynomial arithmetic: acc = acc * (offset + scale t) + c_k.
    const Polynomial lin({offset, scale});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Polynomial({*it});
    return acc;
}

Polynomial Polynomial::deflate(double r) const {
    if (coeffs_.size() <= 1) return {};
    const std::size_t n = coeffs_.size() - 1;
    std::vector<double> q(n);
    double carry = coeffs_[n];
    for (std::size_t k = n; k-- > 0;) {
        q[k] = carry;
        carry = coeffs_[k] + carry * r;
    }
    return Polynomial(std::move(q));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> r(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) r[k] += o.coeffs_[k];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<double> r(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> r(coeffs_);
    for (double& c : r) c *= s;
    return Polynomial(std::move(r));
}

namespace {

constexpr double kRepeatedRootTol = 64.0 * std::numeric_limits<double>::epsilon();

double polish(const Polynomial& p, double x) {
    const Polynomial dp = p.derivative();
    for (int it = 0; it < 3; ++it) {
        const double f = p(x);
        const double df = dp(x);
        if (f == 0.0 || df == 0.0) break;
        const double next = x - f / df;
        if (std::abs(p(next)) >= std::abs(f)) break;
        x = next;
    }
    return x;
}

std::vector<RealRoot> quadratic_roots(double a, double b, double c) {
    const double disc = b * b - 4.0 * a * c;
    const double scale = b * b + std::abs(4.0 * a * c);
    if (std::abs(disc) <= kRepeatedRootTol * scale) return {{-b / (2.0 * a), 2}};
    if (disc < 0.0) return {};
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1 = q / a;
    double r2 = q != 0.0 ? c / q : 0.0;
    if (r1 > r2) std::swap(r1, r2);
    return {{r1, 1}, {r2, 1}};
}

std::vector<RealRoot> cubic_roots(const Polynomial& poly) {
    const double a0 = poly.coeff(3);
    const double b = poly.coeff(2) / a0, c = poly.coeff(1) / a0, d = poly.coeff(0) / a0;
    // x = t - b/3 gives t^3 + p t + q
    const double shift = -b / 3.0;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double disc = -(4.0 * p * p * p + 27.0 * q * q);
    const double scale = 4.0 * std::abs(p * p * p) + 27.0 * q * q;
    const double coeff_scale = std::max({std::abs(b) * std::abs(b), std::abs(c), 1e-300});

    std::vector<RealRoot> roots;
    if (std::abs(p) <= kRepeatedRootTol * coeff_scale &&
        std::abs(q) <= kRepeatedRootTol * coeff_scale * std::sqrt(coeff_scale)) {
        roots.push_back({shift, 3});
    } else if (std::abs(disc) <= kRepeatedRootTol * scale) {
        const double simple = 3.0 * q / p + shift;
        const double twice = -1.5 * q / p + shift;
        roots.push_back({polish(poly, simple), 1});
        roots.push_back({twice, 2});
    } else if (disc > 0.0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        // cos(3 theta) = (3q / 2p) sqrt(-3/p) = 3q / (p m)
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            const double t = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
            roots.push_back({polish(poly, t + shift), 1});
        }
    } else {
        double t;
        if (p == 0.0) {
            t = std::cbrt(-q);
        } else if (p < 0.0) {
            const double m = 2.0 * std::sqrt(-p / 3.0);
            const double arg = 3.0 * std::abs(q) / (-p * m);
            t = -std::copysign(1.0, q) * m * std::cosh(std::acosh(arg) / 3.0);
        } else {
            const double m = 2.0 * std::sqrt(p / 3.0);
            t = -m * std::sinh(std::asinh(3.0 * q / (p * m)) / 3.0);
        }
        roots.push_back({polish(poly, t + shift), 1});
    }
    return roots;
}

}  // namespace

std::vector<RealRoot> real_roots(const Polynomial& p) {
    std::vector<RealRoot> roots;
    switch (p.degree()) {
        case 1: roots.push_back({-p.coeff(0) / p.coeff(1), 1}); break;
        case 2: roots = quadratic_roots(p.coeff(2), p.coeff(1), p.coeff(0)); break;
        case 3: roots = cubic_roots(p); break;
        default: throw DegeneracyError("real_roots: degree must be 1, 2 or 3");
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    // merge numerically coincident roots
    std::vector<RealRoot> merged;
    for (const RealRoot& r : roots) {
        if (!merged.empty() && std::abs(r.value - merged.back().value) <= 1e-10 * (1.0 + std::abs(r.value))) {
            RealRoot& m = merged.back();
            m.value = (m.value * m.multiplicity + r.value * r.multiplicity) /
                      (m.multiplicity + r.multiplicity);
            m.multiplicity += r.multiplicity;
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

}  // namespace cubicop
