#include "cubicop/collocation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cubicop/curve_quadrature.hpp"
#include "cubicop/errors.hpp"

namespace cubicop {

namespace {

// P_0..P_order in x
std::vector<Polynomial> y_derivative_numerators(const Polynomial& phi, int order) {
    std::vector<Polynomial> P{Polynomial::constant(1.0)};
    const Polynomial dphi = phi.derivative();
    for (int j = 0; j < order; ++j) {
        const Polynomial& p = P.back();
        P.push_back(p.derivative() * phi + (0.5 - j) * (dphi * p));
    }
    return P;
}

double binomial(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// R_j = P_j(x) / phi(x)^j, so that d^j y / dx^j = y R_j
std::vector<double> y_ratios(const std::vector<Polynomial>& P, double phi, double x) {
    std::vector<double> R(P.size());
    double pw = 1.0;
    for (std::size_t j = 0; j < P.size(); ++j) {
        R[j] = P[j](x) / pw;
        pw *= phi;
    }
    return R;
}

void check_phi(double phi, double x) {
    if (!(phi > 0.0)) throw DomainError("differentiate: phi(" + std::to_string(x) + ") <= 0");
}

}  // namespace

CurveFunction differentiate(const CurveExpansion& u, int order) {
    if (order < 0) throw ParameterDomainError("differentiate: negative order");
    const auto P = y_derivative_numerators(u.basis.chart().curve.phi, order);
    return [u, order, P](double x, double y) {
        const CurveChart& ch = u.basis.chart();
        const double t = ch.to_t(x);
        std::vector<double> chart_pow(static_cast<std::size_t>(order) + 1, 1.0);
        for (int r = 1; r <= order; ++r) chart_pow[static_cast<std::size_t>(r)] = chart_pow[static_cast<std::size_t>(r) - 1] / ch.scale;

        double value = 0.0;
        if (!u.a.empty()) {
            const auto dp = u.basis.fam_x().eval_derivatives(t, static_cast<int>(u.a.size()), order);
            double s = 0.0;
            for (std::size_t k = 0; k < u.a.size(); ++k) s += u.a[k] * dp[static_cast<std::size_t>(order)][k];
            value += s * chart_pow[static_cast<std::size_t>(order)];
        }
        if (!u.b.empty()) {
            const double phi = ch.curve(x);
            if (order > 0) check_phi(phi, x);
            const auto R = y_ratios(P, phi, x);
            const auto dq = u.basis.fam_y().eval_derivatives(t, static_cast<int>(u.b.size()), order);
            double s = 0.0;
            for (int i = 0; i <= order; ++i) {
                double qi = 0.0;
                for (std::size_t k = 0; k < u.b.size(); ++k) qi += u.b[k] * dq[static_cast<std::size_t>(i)][k];
                s += binomial(order, i) * R[static_cast<std::size_t>(order - i)] * qi * chart_pow[static_cast<std::size_t>(i)];
            }
            value += y * s;
        }
        return value;
    };
}

Eigen::MatrixXd column_derivatives(const CurveBasis& basis, int N, int order, double x, double y) {
    if (N < 1 || order < 0) throw ParameterDomainError("column_derivatives: needs N >= 1 and order >= 0");
    const CurveChart& ch = basis.chart();
    const double t = ch.to_t(x);
    const double phi = ch.curve(x);
    if (order > 0) check_phi(phi, x);
    const auto P = y_derivative_numerators(ch.curve.phi, order);
    const auto R = y_ratios(P, phi, x);
    const auto dp = basis.fam_x().eval_derivatives(t, N, order);
    const auto dq = basis.fam_y().eval_derivatives(t, N, order);

    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(order + 1, 2 * N);
    for (int r = 0; r <= order; ++r) {
        const double sr = std::pow(ch.scale, -r);
        for (int k = 0; k < N; ++k) {
            D(r, k) = dp[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * sr;
            double s = 0.0;
            for (int i = 0; i <= r; ++i)
                s += binomial(r, i) * R[static_cast<std::size_t>(r - i)] * dq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     std::pow(ch.scale, -i);
            D(r, N + k) = y * s;
        }
    }
    return D;
}

CollocationSolution solve(const CollocationProblem& problem, int n) {
    if (problem.coefficients.empty()) throw ParameterDomainError("solve: no ODE coefficients");
    if (!problem.rhs) throw ParameterDomainError("solve: missing right-hand side");
    const CurveQuadRule rule = curve_quadrature(problem.basis, n);
    const int N = rule.N;
    const int order = static_cast<int>(problem.coefficients.size()) - 1;
    const auto pts = rule.points();
    const auto rows = static_cast<Eigen::Index>(pts.size());
    if (static_cast<Eigen::Index>(problem.boundary.size()) > rows)
        throw ParameterDomainError("solve: more boundary conditions than nodes");

    Eigen::MatrixXd A(rows, 2 * N);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto [x, y] = pts[static_cast<std::size_t>(r)];
        const Eigen::MatrixXd D = column_derivatives(problem.basis, N, order, x, y);
        A.row(r).setZero();
        for (int l = 0; l <= order; ++l) {
            const double c = problem.coefficients[static_cast<std::size_t>(l)](x, y);
            if (c != 0.0) A.row(r) += c * D.row(l);
        }
        rhs(r) = problem.rhs(x, y);
    }

    std::vector<bool> used(static_cast<std::size_t>(rows), false);
    for (const BoundaryCondition& bc : problem.boundary) {
        // points() lists +y before -y, so the strict comparison prefers +y on ties
        Eigen::Index best = -1;
        double dist = std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (used[static_cast<std::size_t>(r)]) continue;
            const auto [x, y] = pts[static_cast<std::size_t>(r)];
            const double d = std::hypot(x - bc.x, y - bc.y);
            if (d < dist) {
                dist = d;
                best = r;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        A.row(best) = column_derivatives(problem.basis, N, 0, bc.x, bc.y).row(0);
        rhs(best) = bc.value;
    }

    if (problem.equilibrate) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double m = A.row(r).cwiseAbs().maxCoeff();
            if (m > 0.0) {
                A.row(r) /= m;
                rhs(r) /= m;
            }
        }
    }

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rc = lu.rcond();
    const double cond = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(cond <= 1e15)) throw SolveError("solve: condition estimate " + std::to_string(cond) + " exceeds 1e15", cond);
    const Eigen::VectorXd c = lu.solve(rhs);

    return CollocationSolution{CurveExpansion{problem.basis, std::vector<double>(c.data(), c.data() + N),
                                              std::vector<double>(c.data() + N, c.data() + 2 * N)},
                               cond, (A * c - rhs).cwiseAbs().maxCoeff(), N};
}

Example2Coefficients ode_coefficients_example2(const CurveChart& chart, double c1, double c2) {
    const Polynomial phi = chart.curve.phi, d1 = phi.derivative(), d2 = d1.derivative();
    // A = y phi a_2 = c1 y phi + c2 phi^2 + c2 x phi phi' / 2
    auto A = [=](double x, double y) {
        const double f = phi(x);
        return c1 * y * f + c2 * f * f + 0.5 * c2 * x * f * d1(x);
    };
    Example2Coefficients e;
    e.a2 = A;
    // y phi a_1 = -y phi da_2/dx = -c2 (phi phi' + x phi phi'' / 2 - x phi'^2 / 4)
    e.a1 = [=](double x, double) {
        const double f = phi(x), g = d1(x);
        return -c2 * (f * g + 0.5 * x * f * d2(x) - 0.25 * x * g * g);
    };
    // y phi a_2^3 = A^3 / (y phi)^2
    e.a0 = [=](double x, double y) {
        const double yf = y * phi(x);
        const double a = A(x, y);
        return a * a * a / (yf * yf);
    };
    e.g = [](double, double) { return 0.0; };
    return e;
}

}  // namespace cubicop
