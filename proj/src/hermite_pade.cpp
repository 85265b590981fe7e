#include "cubicop/hermite_pade.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "cubicop/errors.hpp"

namespace cubicop {

HPGrid hp_grid(Interval domain, int N) {
    if (N < 1) throw ParameterDomainError("hp_grid: N must be >= 1");
    if (!domain.bounded() || !(domain.lo < domain.hi)) throw ParameterDomainError("hp_grid: needs a bounded interval");
    HPGrid g{domain, {}, {}};
    const double mid = 0.5 * (domain.lo + domain.hi), half = 0.5 * (domain.hi - domain.lo);
    for (int k = 0; k < N; ++k) {
        // cos((2j+1) pi / 2N) taken in descending order of j gives ascending nodes
        const double t = -std::cos((2.0 * k + 1.0) * M_PI / (2.0 * N));
        g.nodes.push_back(mid + half * t);
        g.weights.push_back(M_PI / N);
    }
    return g;
}

void hp_basis(const HPGrid& grid, double x, std::span<double> out) {
    const double t = (2.0 * x - grid.domain.lo - grid.domain.hi) / (grid.domain.hi - grid.domain.lo);
    const double c0 = 1.0 / std::sqrt(M_PI), c = std::sqrt(2.0 / M_PI);
    double tm = 1.0, tk = t;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k == 0) {
            out[k] = c0;
        } else if (k == 1) {
            out[k] = c * t;
        } else {
            const double tn = 2.0 * t * tk - tm;
            tm = tk;
            tk = tn;
            out[k] = c * tk;
        }
    }
}

std::vector<double> HPApproximant::coefficients_at(double x) const {
    std::vector<double> q(static_cast<std::size_t>(d) + 1);
    hp_basis(grid, x, q);
    std::vector<double> p(polys.size(), 0.0);
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (std::size_t k = 0; k < q.size(); ++k) p[j] += polys[j][k] * q[k];
    return p;
}

namespace {

void check_values(const HPGrid& grid, std::span<const double> values) {
    if (values.size() != grid.nodes.size())
        throw ShapeError("hp_fit: " + std::to_string(grid.nodes.size()) + " nodes but " +
                         std::to_string(values.size()) + " values");
    for (double v : values)
        if (!std::isfinite(v)) throw NumericalError("hp_fit: non-finite sample");
}

Eigen::MatrixXd basis_block(const HPGrid& grid, int d) {
    const auto N = static_cast<Eigen::Index>(grid.nodes.size());
    Eigen::MatrixXd Q(N, d + 1);
    std::vector<double> q(static_cast<std::size_t>(d) + 1);
    for (Eigen::Index i = 0; i < N; ++i) {
        hp_basis(grid, grid.nodes[static_cast<std::size_t>(i)], q);
        const double sw = std::sqrt(grid.weights[static_cast<std::size_t>(i)]);
        for (int k = 0; k <= d; ++k) Q(i, k) = sw * q[static_cast<std::size_t>(k)];
    }
    return Q;
}

}  // namespace

HPApproximant hp_fit(const HPGrid& grid, std::span<const double> values, int m, int d) {
    if (m < 1 || d < 0) throw ParameterDomainError("hp_fit: needs m >= 1 and d >= 0");
    const int N = static_cast<int>(grid.nodes.size());
    if (N < m * (d + 1) + d)
        throw ParameterDomainError("hp_fit: N = " + std::to_string(N) + " < m(d+1)+d = " +
                                   std::to_string(m * (d + 1) + d));
    check_values(grid, values);

    const Eigen::MatrixXd Q = basis_block(grid, d);
    const int cols = (m + 1) * (d + 1);
    Eigen::MatrixXd A(N, cols);
    for (int i = 0; i < N; ++i) {
        double fj = 1.0;
        for (int j = 0; j <= m; ++j) {
            for (int k = 0; k <= d; ++k) A(i, j * (d + 1) + k) = Q(i, k) * fj;
            fj *= values[static_cast<std::size_t>(i)];
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const Eigen::VectorXd c = svd.matrixV().col(cols - 1);
    const Eigen::VectorXd& s = svd.singularValues();

    HPApproximant h;
    h.m = m;
    h.d = d;
    h.grid = grid;
    h.polys.assign(static_cast<std::size_t>(m) + 1, std::vector<double>(static_cast<std::size_t>(d) + 1));
    for (int j = 0; j <= m; ++j)
        for (int k = 0; k <= d; ++k) h.polys[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = c(j * (d + 1) + k);
    h.residual = (A * c).norm();
    // with fewer rows than columns the null space is at least one-dimensional;
    // a second tiny singular value means the minimiser is not unique
    const double tiny = 1e-13 * (s.size() > 0 ? s(0) : 1.0);
    int small = cols - static_cast<int>(s.size());
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) <= tiny) ++small;
    h.degenerate = small > 1;
    return h;
}

HPApproximant hp_fit_polynomial(const HPGrid& grid, std::span<const double> values, int d) {
    const int N = static_cast<int>(grid.nodes.size());
    if (d < 0 || d > N - 1) throw ParameterDomainError("hp_fit_polynomial: needs 0 <= d <= N - 1");
    check_values(grid, values);
    const Eigen::MatrixXd Q = basis_block(grid, d);
    Eigen::VectorXd f(N);
    for (int i = 0; i < N; ++i) f(i) = std::sqrt(grid.weights[static_cast<std::size_t>(i)]) * values[static_cast<std::size_t>(i)];
    const Eigen::VectorXd a = Q.transpose() * f;  // projection onto the orthonormal basis

    HPApproximant h;
    h.m = 1;
    h.d = d;
    h.grid = grid;
    h.polys.assign(2, std::vector<double>(static_cast<std::size_t>(d) + 1, 0.0));
    // p_1 = 1 = sqrt(pi) q_0, p_0 = -fit, then scale to a unit vector
    const double one = std::sqrt(M_PI);
    double norm2 = one * one;
    for (int k = 0; k <= d; ++k) norm2 += a(k) * a(k);
    const double s = 1.0 / std::sqrt(norm2);
    for (int k = 0; k <= d; ++k) h.polys[0][static_cast<std::size_t>(k)] = -a(k) * s;
    h.polys[1][0] = one * s;
    h.residual = (f - Q * a).norm() * s;
    return h;
}

double hp_eval(const HPApproximant& approx, double x, double guess) {
    const std::vector<double> p = approx.coefficients_at(x);
    int deg = static_cast<int>(p.size()) - 1;
    double pmax = 0.0;
    for (double v : p) pmax = std::max(pmax, std::abs(v));
    if (pmax == 0.0 || !std::isfinite(pmax)) throw BranchLossError("hp_eval: all coefficients vanish at x");

    if (deg == 1 && p[1] != 0.0) return -p[0] / p[1];

    double psi = std::isfinite(guess) ? guess : 0.0;
    for (int it = 0; it < 50; ++it) {
        double v = 0.0, dv = 0.0, scale = 0.0;
        for (int j = deg; j >= 0; --j) {
            dv = dv * psi + v;
            v = v * psi + p[static_cast<std::size_t>(j)];
            scale = scale * std::abs(psi) + std::abs(p[static_cast<std::size_t>(j)]);
        }
        if (std::abs(v) <= 1e-13 * scale) return psi;
        if (dv == 0.0 || !std::isfinite(dv)) break;
        const double step = v / dv;
        psi -= step;
        if (!std::isfinite(psi)) break;
        if (std::abs(step) <= 1e-13 * (1.0 + std::abs(psi))) return psi;
    }

    // drop leading coefficients that vanish at x
    while (deg > 0 && std::abs(p[static_cast<std::size_t>(deg)]) <= 1e-14 * pmax) --deg;
    if (deg == 0) throw BranchLossError("hp_eval: no root, only the constant term survives");
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) C(i, deg - 1) = -p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(deg)];
    const Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    double best = std::numeric_limits<double>::quiet_NaN(), dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-8) continue;
        const double dz = std::abs(z.real() - guess);
        if (dz < dist) {
            dist = dz;
            best = z.real();
        }
    }
    if (!std::isfinite(best))
        throw BranchLossError("hp_eval: every root is complex at x = " + std::to_string(x));
    return best;
}

std::vector<double> hp_eval_sweep(const HPApproximant& approx, std::span<const double> xs, double first_guess) {
    std::vector<double> out;
    out.reserve(xs.size());
    double guess = first_guess;
    for (double x : xs) {
        const double v = hp_eval(approx, x, guess);
        out.push_back(v);
        guess = v;
    }
    return out;
}

}  // namespace cubicop
