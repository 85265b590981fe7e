#include "cubicop/curve_quadrature.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "cubicop/errors.hpp"

namespace cubicop {

int gauss_order_for(int n) {
    if (n < 1) throw ParameterDomainError("curve quadrature needs n >= 1");
    return n % 2 == 0 ? 3 * (n / 2) : 3 * (n / 2) + 1;
}

double CurveQuadRule::integrate(const CurveFunction& f) const {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += weights[k] * (f(x[k], y[k]) + f(x[k], -y[k]));
    return s;
}

std::vector<std::pair<double, double>> CurveQuadRule::points() const {
    std::vector<std::pair<double, double>> p;
    p.reserve(2 * x.size());
    for (std::size_t k = 0; k < x.size(); ++k) p.emplace_back(x[k], y[k]);
    for (std::size_t k = 0; k < x.size(); ++k) p.emplace_back(x[k], -y[k]);
    return p;
}

CurveQuadRule curve_quadrature(const CurveBasis& basis, int n) {
    CurveQuadRule r;
    r.n = n;
    r.N = gauss_order_for(n);
    if (r.N > basis.fam_x().degree_cap())
        throw IndexError("curve_quadrature: N = " + std::to_string(r.N) + " exceeds the basis family cap");
    r.base = gauss_rule(basis.fam_x(), r.N);
    r.weights = r.base.weights;
    for (double t : r.base.nodes) {
        const double x = basis.chart().to_x(t);
        const double p = basis.phi(x);
        // Gauss nodes are interior, so this only fires on an inconsistent chart
        if (!(p > 0.0)) throw NumericalError("curve_quadrature: phi <= 0 at node x = " + std::to_string(x));
        r.x.push_back(x);
        r.y.push_back(std::sqrt(p));
    }
    return r;
}

std::vector<double> sample(const CurveQuadRule& rule, const CurveFunction& f) {
    std::vector<double> v;
    v.reserve(2 * rule.x.size());
    for (const auto& [x, y] : rule.points()) v.push_back(f(x, y));
    return v;
}

namespace {

void check_samples(const CurveQuadRule& rule, std::span<const double> samples) {
    if (samples.size() != 2 * rule.x.size())
        throw ShapeError("interpolation needs " + std::to_string(2 * rule.x.size()) + " samples, got " +
                         std::to_string(samples.size()));
}

void check_cap(const CurveBasis& basis, int N) {
    if (N - 1 > basis.max_degree())
        throw IndexError("interpolation needs degree " + std::to_string(N - 1) + " but the basis stops at " +
                         std::to_string(basis.max_degree()));
}

}  // namespace

CurveExpansion curve_interpolate(const CurveBasis& basis, int n, std::span<const double> samples) {
    if (basis.mode() != InnerMode::Bracket)
        throw ParameterDomainError("curve_interpolate: quadrature coefficients need the Bracket basis");
    const CurveQuadRule rule = curve_quadrature(basis, n);
    check_samples(rule, samples);
    const int N = rule.N;
    check_cap(basis, N);
    const auto uN = static_cast<std::size_t>(N);

    CurveExpansion e{basis, std::vector<double>(uN, 0.0), std::vector<double>(uN, 0.0)};
    std::vector<double> p(uN);
    for (std::size_t k = 0; k < uN; ++k) {
        const double plus = samples[k], minus = samples[k + uN];
        const double fe = 0.5 * (plus + minus), fo = (plus - minus) / (2.0 * rule.y[k]);
        basis.fam_x().eval_all(rule.base.nodes[k], p);
        for (std::size_t j = 0; j < uN; ++j) {
            e.a[j] += rule.weights[k] * fe * p[j];
            e.b[j] += rule.weights[k] * fo * p[j];
        }
    }
    for (std::size_t j = 0; j < uN; ++j) {
        const double h = basis.fam_x().norm(static_cast<int>(j));
        e.a[j] /= h;
        e.b[j] /= h;
    }
    return e;
}

AngleInterpolant curve_interpolate_angle(const CurveBasis& basis, int n, std::span<const double> samples) {
    if (basis.mode() != InnerMode::Angle)
        throw ParameterDomainError("curve_interpolate_angle: needs the Angle basis");
    const CurveQuadRule rule = curve_quadrature(basis, n);
    check_samples(rule, samples);
    const int N = rule.N;
    check_cap(basis, N);
    const auto uN = static_cast<std::size_t>(N);

    Eigen::MatrixXd V(2 * N, 2 * N);
    std::vector<double> p(uN), q(uN);
    for (std::size_t k = 0; k < uN; ++k) {
        basis.fam_x().eval_all(rule.base.nodes[k], p);
        basis.fam_y().eval_all(rule.base.nodes[k], q);
        const auto rp = static_cast<Eigen::Index>(k), rm = static_cast<Eigen::Index>(k + uN);
        for (std::size_t j = 0; j < uN; ++j) {
            const auto ca = static_cast<Eigen::Index>(j), cb = static_cast<Eigen::Index>(j + uN);
            V(rp, ca) = V(rm, ca) = p[j];
            V(rp, cb) = rule.y[k] * q[j];
            V(rm, cb) = -rule.y[k] * q[j];
        }
    }
    const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(samples.data(), 2 * N);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(V);
    const Eigen::VectorXd c = lu.solve(rhs);
    if (!c.allFinite()) throw NumericalError("curve_interpolate_angle: singular interpolation system");

    AngleInterpolant out{CurveExpansion{basis, std::vector<double>(c.data(), c.data() + N),
                                        std::vector<double>(c.data() + N, c.data() + 2 * N)},
                         lu.rcond(), false};
    out.ill_conditioned = out.rcond < 1e-13;
    return out;
}

double discrete_inner(const CurveBasis& basis, int n, const CurveFunction& f, const CurveFunction& g,
                      DiscreteInner which) {
    const CurveQuadRule rule = curve_quadrature(basis, n);
    double s = 0.0;
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
        const double x = rule.x[k], y = rule.y[k];
        const double fp = f(x, y), fm = f(x, -y), gp = g(x, y), gm = g(x, -y);
        if (which == DiscreteInner::GaussAngle) {
            s += rule.weights[k] * (fp * gp + fm * gm);
        } else {
            const double fe = 0.5 * (fp + fm), fo = (fp - fm) / (2.0 * y);
            const double ge = 0.5 * (gp + gm), go = (gp - gm) / (2.0 * y);
            s += rule.weights[k] * (fe * ge + fo * go);
        }
    }
    return s;
}

}  // namespace cubicop
