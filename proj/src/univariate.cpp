#include "cubicop/univariate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cubicop/errors.hpp"
#include "cubicop/tridiagonal_eigen.hpp"

namespace cubicop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_parameter(bool ok, const char* what) {
    if (!ok) throw ParameterDomainError(what);
}

struct Recurrence {
    std::vector<double> diag, offdiag, norms, signs;
    double moment0 = 0.0;
    Interval support;
};

Recurrence legendre_recurrence(int cap) {
    Recurrence r;
    r.support = {-1.0, 1.0};
    r.moment0 = 2.0;
    for (int k = 0; k <= cap; ++k) {
        r.diag.push_back(0.0);
        const double kk = k + 1.0;
        r.offdiag.push_back(kk / std::sqrt(4.0 * kk * kk - 1.0));
        r.norms.push_back(2.0 / (2.0 * k + 1.0));
        r.signs.push_back(1.0);
    }
    return r;
}

Recurrence chebyshev_recurrence(int cap) {
    Recurrence r;
    r.support = {-1.0, 1.0};
    r.moment0 = std::numbers::pi;
    for (int k = 0; k <= cap; ++k) {
        r.diag.push_back(0.0);
        r.offdiag.push_back(k == 0 ? std::numbers::sqrt2 / 2.0 : 0.5);
        r.norms.push_back(k == 0 ? std::numbers::pi : std::numbers::pi / 2.0);
        r.signs.push_back(1.0);
    }
    return r;
}

Recurrence jacobi_recurrence(double a, double b, int cap) {
    require_parameter(a > -1.0 && b > -1.0, "Jacobi parameters must satisfy alpha, beta > -1");
    Recurrence r;
    r.support = {-1.0, 1.0};
    const double s = a + b;
    r.moment0 = std::exp2(s + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(s + 2.0);
    for (int k = 0; k <= cap; ++k) {
        const double kk = k;
        if (k == 0) {
            r.diag.push_back((b - a) / (s + 2.0));
        } else {
            r.diag.push_back((b * b - a * a) / ((2.0 * kk + s) * (2.0 * kk + s + 2.0)));
        }
        const double n = kk + 1.0;  // b_n couples n-1 and n
        double b2;
        if (n == 1.0) {
            b2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else {
            const double t = 2.0 * n + s;
            b2 = 4.0 * n * (n + a) * (n + b) * (n + s) / (t * t * (t + 1.0) * (t - 1.0));
        }
        r.offdiag.push_back(std::sqrt(b2));
        double h;
        if (k == 0) {
            h = r.moment0;
        } else if (k == 1) {
            h = r.moment0 * (a + 1.0) * (b + 1.0) / (s + 3.0);
        } else {
            h = r.norms.back() * (2.0 * kk + s - 1.0) * (kk + a) * (kk + b) /
                ((2.0 * kk + s + 1.0) * kk * (kk + s));
        }
        r.norms.push_back(h);
        r.signs.push_back(1.0);
    }
    return r;
}

Recurrence laguerre_recurrence(double a, int cap) {
    require_parameter(a > -1.0, "Laguerre parameter must satisfy alpha > -1");
    Recurrence r;
    r.support = {0.0, kInf};
    r.moment0 = 1.0;
    double h = 1.0;
    for (int k = 0; k <= cap; ++k) {
        const double kk = k;
        r.diag.push_back(2.0 * kk + a + 1.0);
        r.offdiag.push_back(std::sqrt((kk + 1.0) * (kk + 1.0 + a)));
        if (k > 0) h *= (kk + a) / kk;
        r.norms.push_back(h);
        r.signs.push_back(k % 2 == 0 ? 1.0 : -1.0);
    }
    return r;
}

}  // namespace

OPFamily::OPFamily(FamilySpec spec, Interval support, double moment0, std::vector<double> diag,
                   std::vector<double> offdiag, std::vector<double> norms, std::vector<double> signs)
    : spec_(spec),
      support_(support),
      moment0_(moment0),
      diag_(std::move(diag)),
      offdiag_(std::move(offdiag)),
      norms_(std::move(norms)),
      signs_(std::move(signs)) {
    if (diag_.empty() || offdiag_.size() != diag_.size() || norms_.size() != diag_.size() ||
        signs_.size() != diag_.size())
        throw ShapeError("OPFamily: inconsistent recurrence lengths");
    if (!(moment0_ > 0.0)) throw ParameterDomainError("OPFamily: weight moment must be positive");
    for (double b : offdiag_)
        if (!(b > 0.0)) throw NumericalError("OPFamily: recurrence coefficient b_k must be positive");
    for (double h : norms_)
        if (!(h > 0.0)) throw NumericalError("OPFamily: norms must be positive");
}

void OPFamily::check_degree(int k) const {
    if (k < 0 || k > degree_cap())
        throw IndexError("degree " + std::to_string(k) + " outside 0.." + std::to_string(degree_cap()));
}

double OPFamily::norm(int k) const {
    check_degree(k);
    return norms_[static_cast<std::size_t>(k)];
}

double OPFamily::diag(int k) const {
    check_degree(k);
    return diag_[static_cast<std::size_t>(k)];
}

double OPFamily::offdiag(int k) const {
    if (k < 1 || k > degree_cap() + 1) throw IndexError("offdiag index out of range");
    return offdiag_[static_cast<std::size_t>(k - 1)];
}

double OPFamily::orthonormal_factor(int k) const {
    check_degree(k);
    const auto i = static_cast<std::size_t>(k);
    return signs_[i] * std::sqrt(norms_[i]);
}

void OPFamily::eval_all(double x, std::span<double> out) const {
    if (out.empty()) return;
    check_degree(static_cast<int>(out.size()) - 1);
    double qm1 = 0.0;
    double q = 1.0 / std::sqrt(moment0_);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = orthonormal_factor(static_cast<int>(k)) * q;
        if (k + 1 == out.size()) break;
        const double bk = k == 0 ? 0.0 : offdiag_[k - 1];
        const double qp1 = ((x - diag_[k]) * q - bk * qm1) / offdiag_[k];
        qm1 = q;
        q = qp1;
    }
}

double OPFamily::eval(int k, double x) const {
    check_degree(k);
    std::vector<double> v(static_cast<std::size_t>(k) + 1);
    eval_all(x, v);
    return v.back();
}

std::vector<std::vector<double>> OPFamily::eval_derivatives(double x, int count, int order) const {
    if (count <= 0) return std::vector<std::vector<double>>(static_cast<std::size_t>(order) + 1);
    check_degree(count - 1);
    const auto n = static_cast<std::size_t>(count);
    std::vector<std::vector<double>> q(static_cast<std::size_t>(order) + 1, std::vector<double>(n, 0.0));
    q[0][0] = 1.0 / std::sqrt(moment0_);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double bk = k == 0 ? 0.0 : offdiag_[k - 1];
        for (std::size_t r = 0; r < q.size(); ++r) {
            const double prev = k == 0 ? 0.0 : q[r][k - 1];
            const double lower = r == 0 ? 0.0 : static_cast<double>(r) * q[r - 1][k];
            q[r][k + 1] = ((x - diag_[k]) * q[r][k] + lower - bk * prev) / offdiag_[k];
        }
    }
    for (auto& row : q)
        for (std::size_t k = 0; k < n; ++k) row[k] *= orthonormal_factor(static_cast<int>(k));
    return q;
}

double OPFamily::clenshaw(std::span<const double> coeffs, double x) const {
    const int n = static_cast<int>(coeffs.size());
    if (n == 0) return 0.0;
    check_degree(n - 1);
    double y1 = 0.0, y2 = 0.0;  // y_{k+1}, y_{k+2}
    for (int k = n - 1; k >= 0; --k) {
        const auto i = static_cast<std::size_t>(k);
        const double d = coeffs[i] * orthonormal_factor(k);
        const double alpha = (x - diag_[i]) / offdiag_[i];
        // beta_{k+1} = -b_{k+1} / b_{k+2}, only needed while y_{k+2} exists
        const double beta_next = k + 2 <= n - 1 ? -offdiag_[i] / offdiag_[i + 1] : 0.0;
        const double yk = d + alpha * y1 + beta_next * y2;
        y2 = y1;
        y1 = yk;
    }
    return y1 / std::sqrt(moment0_);
}

OPFamily OPFamily::scaled(double c) const {
    if (!(c > 0.0)) throw ParameterDomainError("OPFamily::scaled: factor must be positive");
    std::vector<double> norms(norms_);
    for (double& h : norms) h *= c;
    return OPFamily(spec_, support_, moment0_ * c, diag_, offdiag_, std::move(norms), signs_);
}

OPFamily build_family(const FamilySpec& spec, int degree_cap) {
    if (degree_cap < 0) throw ParameterDomainError("build_family: degree_cap must be >= 0");
    Recurrence r;
    switch (spec.kind) {
        case FamilyKind::Legendre: r = legendre_recurrence(degree_cap); break;
        case FamilyKind::ChebyshevT: r = chebyshev_recurrence(degree_cap); break;
        case FamilyKind::Jacobi: r = jacobi_recurrence(spec.alpha, spec.beta, degree_cap); break;
        case FamilyKind::Laguerre: r = laguerre_recurrence(spec.alpha, degree_cap); break;
        case FamilyKind::Modified:
            throw ParameterDomainError("build_family: modified families come from modify()");
    }
    return OPFamily(spec, r.support, r.moment0, std::move(r.diag), std::move(r.offdiag),
                    std::move(r.norms), std::move(r.signs));
}

GaussRule gauss_rule(const OPFamily& family, int N) {
    if (N < 1 || N > family.degree_cap())
        throw IndexError("gauss_rule: order " + std::to_string(N) + " outside 1.." +
                         std::to_string(family.degree_cap()));
    const auto diag = family.diagonal().subspan(0, static_cast<std::size_t>(N));
    const auto off = family.offdiagonal().subspan(0, static_cast<std::size_t>(N - 1));
    TridiagonalEigen eig = symmetric_tridiagonal_eigen(diag, off);
    GaussRule rule;
    rule.order = N;
    rule.nodes = std::move(eig.values);
    rule.weights.reserve(rule.nodes.size());
    for (double v : eig.first_components) rule.weights.push_back(family.moment0() * v * v);
    return rule;
}

std::vector<double> lagrange_interpolate(const OPFamily& family, const GaussRule& rule,
                                         std::span<const double> values) {
    const std::size_t N = rule.nodes.size();
    if (values.size() != N)
        throw ShapeError("lagrange_interpolate: expected " + std::to_string(N) + " values, got " +
                         std::to_string(values.size()));
    std::vector<double> coeffs(N, 0.0);
    std::vector<double> p(N);
    for (std::size_t i = 0; i < N; ++i) {
        family.eval_all(rule.nodes[i], p);
        const double wf = rule.weights[i] * values[i];
        for (std::size_t k = 0; k < N; ++k) coeffs[k] += wf * p[k];
    }
    for (std::size_t k = 0; k < N; ++k) coeffs[k] /= family.norm(static_cast<int>(k));
    return coeffs;
}

std::vector<double> lagrange_interpolate(const OPFamily& family, int N, std::span<const double> values) {
    if (values.size() != static_cast<std::size_t>(std::max(N, 0)))
        throw ShapeError("lagrange_interpolate: expected " + std::to_string(N) + " values, got " +
                         std::to_string(values.size()));
    return lagrange_interpolate(family, gauss_rule(family, N), values);
}

double christoffel_darboux_kernel(const OPFamily& family, int N, double x, double y) {
    if (N < 1 || N > family.degree_cap() + 1) throw IndexError("christoffel_darboux_kernel: N out of range");
    std::vector<double> px(static_cast<std::size_t>(N)), py(static_cast<std::size_t>(N));
    family.eval_all(x, px);
    family.eval_all(y, py);
    double k = 0.0;
    for (int j = 0; j < N; ++j) {
        const auto i = static_cast<std::size_t>(j);
        k += px[i] * py[i] / family.norm(j);
    }
    return k;
}

std::vector<double> legendre_derivative_coeffs(std::span<const double> c) {
    if (c.size() <= 1) return std::vector<double>(1, 0.0);
    std::vector<double> d(c.size() - 1);
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = 0.5 * static_cast<double>(j + 2) * c[j + 1];
    return d;
}

}  // namespace cubicop
