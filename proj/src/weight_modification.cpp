#include "cubicop/weight_modification.hpp"

#include <cmath>
#include <string>

#include "cubicop/errors.hpp"

namespace cubicop {

namespace {

void check_multiplier_positive(const OPFamily& base, const Polynomial& g) {
    const Interval s = base.support();
    const int d = g.degree();
    if (d < 0) throw PositivityError("modify: multiplier is identically zero");
    if (d > 3) throw ParameterDomainError("modify: multiplier degree must be <= 3");
    if (d >= 1) {
        for (const RealRoot& r : real_roots(g)) {
            const double tol = 1e-12 * (1.0 + std::abs(r.value));
            if (r.value > s.lo + tol && r.value < s.hi - tol)
                throw PositivityError("modify: multiplier vanishes at " + std::to_string(r.value) +
                                      " inside the support");
        }
    }
    const double probe = s.bounded() ? 0.5 * (s.lo + s.hi) : s.lo + 1.0;
    if (!(g(probe) > 0.0)) throw PositivityError("modify: multiplier is negative on the support");
}

}  // namespace

Eigen::MatrixXd moment_matrix(const OPFamily& base, const Polynomial& g, int n) {
    const int d = std::max(g.degree(), 0);
    if (g.degree() > 3) throw ParameterDomainError("moment_matrix: multiplier degree must be <= 3");
    if (n < 0 || n + d / 2 > base.degree_cap())
        throw IndexError("moment_matrix: need n + deg g / 2 <= base degree cap (" +
                         std::to_string(base.degree_cap()) + ")");
    // A path of length d from i to j (both <= n) never leaves 0..n + d/2, so
    // the leading block of g(J_M) is exact for M = n + 1 + d/2.
    const int M = n + 1 + d / 2;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(M, M);
    for (int k = 0; k < M; ++k) {
        J(k, k) = base.diag(k);
        if (k + 1 < M) J(k, k + 1) = J(k + 1, k) = base.offdiag(k + 1);
    }
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(M, M) * g.coeff(d);
    for (int k = d - 1; k >= 0; --k) {
        G = G * J;
        G.diagonal().array() += g.coeff(k);
    }
    Eigen::MatrixXd block = G.topLeftCorner(n + 1, n + 1);
    // exact symmetry; the products above differ only by rounding
    return 0.5 * (block + block.transpose());
}

Eigen::MatrixXd banded_cholesky(const Eigen::MatrixXd& a, int band) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index k0 = std::max<Eigen::Index>(0, j - band);
        double pivot = a(j, j);
        for (Eigen::Index k = k0; k < j; ++k) pivot -= L(j, k) * L(j, k);
        if (!(pivot > 0.0))
            throw PositivityError("banded_cholesky: matrix not positive definite at pivot " +
                                  std::to_string(j));
        L(j, j) = std::sqrt(pivot);
        const Eigen::Index iend = std::min<Eigen::Index>(n, j + band + 1);
        for (Eigen::Index i = j + 1; i < iend; ++i) {
            double v = a(i, j);
            for (Eigen::Index k = std::max<Eigen::Index>(k0, i - band); k < j; ++k) v -= L(i, k) * L(j, k);
            L(i, j) = v / L(j, j);
        }
    }
    return L;
}

namespace {

struct Step {
    std::vector<double> diag, offdiag;
    Eigen::MatrixXd connection;  // lower triangular, rows 0..cap
    double moment0;
};

// One Cholesky step for a multiplier g > 0 on the support; needs
// cap + deg g + 1 <= recurrence length - 1.
Step cholesky_step(const OPFamily& base, const Polynomial& g, int cap) {
    const Eigen::MatrixXd G = moment_matrix(base, g, cap + 1);
    const Eigen::MatrixXd L = banded_cholesky(G, std::max(g.degree(), 0));
    Step s;
    const auto n = static_cast<std::size_t>(cap) + 1;
    s.diag.resize(n);
    s.offdiag.resize(n);
    for (int k = 0; k <= cap; ++k) {
        const auto i = static_cast<std::size_t>(k);
        s.offdiag[i] = base.offdiag(k + 1) * L(k + 1, k + 1) / L(k, k);
        double a = base.diag(k) + base.offdiag(k + 1) * L(k + 1, k) / L(k, k);
        if (k > 0) a -= base.offdiag(k) * L(k, k - 1) / L(k - 1, k - 1);
        s.diag[i] = a;
    }
    const Eigen::MatrixXd Lk = L.topLeftCorner(cap + 1, cap + 1);
    s.connection = Lk.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(cap + 1, cap + 1));
    s.moment0 = base.moment0() * G(0, 0);
    return s;
}

// g = c * prod_i f_i with every f_i positive on the support: linear factors
// for the real roots (all outside the open support) and, if present, the
// irreducible quadratic. Applying the factors one at a time keeps the
// Cholesky factors well conditioned on the half-line.
std::vector<Polynomial> positive_factors(const Polynomial& g, const Interval& support, double& constant) {
    std::vector<Polynomial> factors;
    Polynomial rest = g;
    double sign = 1.0;
    if (g.degree() >= 1) {
        for (const RealRoot& r : real_roots(g)) {
            for (int k = 0; k < r.multiplicity; ++k) {
                rest = rest.deflate(r.value);
                if (r.value <= support.lo + 1e-12 * (1.0 + std::abs(r.value))) {
                    factors.push_back(Polynomial{-r.value, 1.0});
                } else {
                    factors.push_back(Polynomial{r.value, -1.0});
                    sign = -sign;
                }
            }
        }
    }
    rest = rest * sign;
    if (rest.degree() >= 1) {
        factors.push_back(rest);
        constant = 1.0;
    } else {
        constant = rest.coeff(0);
    }
    if (!(constant > 0.0) || (rest.degree() >= 1 && !(rest.leading() > 0.0)))
        throw PositivityError("modify: multiplier is negative on the support");
    return factors;
}

}  // namespace

ModifiedFamily modify(const OPFamily& base, const Polynomial& g, int degree_cap) {
    if (degree_cap < 0) throw ParameterDomainError("modify: degree_cap must be >= 0");
    check_multiplier_positive(base, g);
    const int d = g.degree();
    if (degree_cap + d + 1 > base.degree_cap())
        throw IndexError("modify: base degree cap " + std::to_string(base.degree_cap()) +
                         " too small for degree_cap " + std::to_string(degree_cap) + " and deg g " +
                         std::to_string(d));

    double constant = 1.0;
    const std::vector<Polynomial> factors = positive_factors(g, base.support(), constant);

    OPFamily current = base;
    Eigen::MatrixXd total = Eigen::MatrixXd::Identity(degree_cap + 1, degree_cap + 1);
    int remaining = d;
    for (const Polynomial& f : factors) {
        remaining -= f.degree();
        const int cap = degree_cap + remaining;
        Step s = cholesky_step(current, f, cap);
        const auto n = static_cast<Eigen::Index>(degree_cap + 1);
        total = (s.connection.topLeftCorner(n, n) * total).eval();
        const auto len = static_cast<std::size_t>(cap) + 1;
        current = OPFamily(FamilySpec{FamilyKind::Modified, base.spec().alpha, base.spec().beta}, base.support(),
                           s.moment0, std::move(s.diag), std::move(s.offdiag), std::vector<double>(len, 1.0),
                           std::vector<double>(len, 1.0));
    }

    // the constant only rescales the orthonormal polynomials
    const auto n = static_cast<std::size_t>(degree_cap) + 1;
    std::vector<double> diag(current.diagonal().begin(), current.diagonal().begin() + static_cast<long>(n));
    std::vector<double> offdiag(current.offdiagonal().begin(), current.offdiagonal().begin() + static_cast<long>(n));
    std::vector<std::vector<double>> connection(n);
    const double inv_sqrt_c = 1.0 / std::sqrt(constant);
    for (std::size_t k = 0; k < n; ++k) {
        connection[k].resize(k + 1);
        for (std::size_t j = 0; j <= k; ++j)
            connection[k][j] = total(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) * inv_sqrt_c;
    }
    OPFamily fam(FamilySpec{FamilyKind::Modified, base.spec().alpha, base.spec().beta}, base.support(),
                 current.moment0() * constant, std::move(diag), std::move(offdiag), std::vector<double>(n, 1.0),
                 std::vector<double>(n, 1.0));
    return ModifiedFamily{g, std::move(connection), std::move(fam)};
}

}  // namespace cubicop
