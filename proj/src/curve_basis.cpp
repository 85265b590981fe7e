#include "cubicop/curve_basis.hpp"

#include <cmath>
#include <string>

#include "cubicop/errors.hpp"
#include "cubicop/weight_modification.hpp"

namespace cubicop {

struct CurveBasis::State {
    CurveChart chart;
    InnerMode mode;
    int max_degree;
    OPFamily fam_x;
    OPFamily fam_y;
};

namespace {

// Family for phi(x(t)) w(t) when phi has only endpoint roots on the chart,
// i.e. cofactor is the constant c > 0.
OPFamily shifted_family(const CurveChart& ch, int cap) {
    const FamilySpec& w = ch.weight;
    if (ch.half_line()) {
        const double a = w.alpha + ch.j;
        const double ratio = std::exp(std::lgamma(a + 1.0) - std::lgamma(w.alpha + 1.0));
        return build_family(FamilySpec::laguerre(a), cap).scaled(ratio);
    }
    if (ch.i == 0 && ch.j == 0) return build_family(w, cap);
    double alpha = w.alpha, beta = w.beta;
    if (w.kind == FamilyKind::Legendre) alpha = beta = 0.0;
    return build_family(FamilySpec::jacobi(alpha + ch.i, beta + ch.j), cap);
}

OPFamily second_family(const CurveChart& ch, int cap) {
    if (ch.k() == 0) return shifted_family(ch, cap).scaled(ch.cofactor.coeff(0));
    const OPFamily base = shifted_family(ch, cap + ch.k() + 1);
    return modify(base, ch.cofactor, cap).family;
}

void check_mode_size(int cap, int need, const char* what) {
    if (need > cap)
        throw IndexError(std::string(what) + ": needs univariate degree " + std::to_string(need) +
                         " but the basis stops at " + std::to_string(cap));
}

// rule nodes in x with y = sqrt(phi) > 0
struct Nodes {
    std::vector<double> x, y, w;
};

Nodes curve_nodes(const CurveBasis& basis, int order) {
    const GaussRule r = basis.x_rule(order);
    Nodes n;
    n.x = r.nodes;
    n.w = r.weights;
    n.y.reserve(r.nodes.size());
    for (double x : r.nodes) {
        const double p = basis.phi(x);
        if (!(p > 0.0)) throw NumericalError("curve node at x = " + std::to_string(x) + " has phi <= 0");
        n.y.push_back(std::sqrt(p));
    }
    return n;
}

}  // namespace

CurveBasis::CurveBasis(const CurveChart& chart, InnerMode mode, int max_degree) {
    if (max_degree < 1) throw ParameterDomainError("CurveBasis: max_degree must be >= 1");
    // fam_x also provides the high-order rules used for continuous inner products
    OPFamily fx = build_family(chart.weight, 2 * max_degree + 24);
    OPFamily fy = mode == InnerMode::Angle ? second_family(chart, max_degree) : fx;
    state_ = std::make_shared<const State>(State{chart, mode, max_degree, std::move(fx), std::move(fy)});
}

const CurveChart& CurveBasis::chart() const { return state_->chart; }
InnerMode CurveBasis::mode() const { return state_->mode; }
int CurveBasis::max_degree() const { return state_->max_degree; }
const OPFamily& CurveBasis::fam_x() const { return state_->fam_x; }
const OPFamily& CurveBasis::fam_y() const { return state_->fam_y; }

int CurveBasis::members(int n) {
    if (n < 0) throw IndexError("curve degree must be >= 0");
    return n == 0 ? 1 : n == 1 ? 2 : 3;
}

BasisTerm CurveBasis::term(int n, int i) {
    if (n < 0 || i < 1 || i > members(n))
        throw IndexError("no basis member Y_{" + std::to_string(n) + "," + std::to_string(i) + "}");
    if (n == 0) return {false, 0};
    if (n == 1) return i == 1 ? BasisTerm{false, 1} : BasisTerm{true, 0};
    const int m = n / 2;
    if (n % 2 == 0) {
        if (i == 1) return {false, 3 * m};
        if (i == 2) return {false, 3 * m - 1};
        return {true, 3 * m - 2};
    }
    if (i == 1) return {false, 3 * m + 1};
    if (i == 2) return {true, 3 * m};
    return {true, 3 * m - 1};
}

int CurveBasis::plain_cap(int n) {
    if (n < 0) throw IndexError("curve degree must be >= 0");
    return n % 2 == 0 ? 3 * (n / 2) : 3 * (n / 2) + 1;
}

int CurveBasis::y_cap(int n) {
    if (n < 0) throw IndexError("curve degree must be >= 0");
    if (n == 0) return -1;
    return n % 2 == 0 ? 3 * (n / 2) - 2 : 3 * (n / 2);
}

double CurveBasis::term_norm(const BasisTerm& t) const {
    const OPFamily& f = t.y_times ? fam_y() : fam_x();
    check_mode_size(t.y_times ? fam_y().degree_cap() : max_degree(), t.degree, "term_norm");
    return mode() == InnerMode::Angle ? 2.0 * f.norm(t.degree) : f.norm(t.degree);
}

double CurveBasis::norm(int n, int i) const { return term_norm(term(n, i)); }

double CurveBasis::eval_term(const BasisTerm& t, double x, double y) const {
    const double tt = chart().to_t(x);
    return t.y_times ? y * fam_y().eval(t.degree, tt) : fam_x().eval(t.degree, tt);
}

double CurveBasis::eval(int n, int i, double x, double y) const { return eval_term(term(n, i), x, y); }

void CurveBasis::eval_families(double x, std::span<double> p, std::span<double> q) const {
    const double t = chart().to_t(x);
    fam_x().eval_all(t, p);
    fam_y().eval_all(t, q);
}

GaussRule CurveBasis::x_rule(int N) const {
    GaussRule r = gauss_rule(fam_x(), N);
    for (double& v : r.nodes) v = chart().to_x(v);
    return r;
}

double CurveExpansion::even(double x) const { return basis.fam_x().clenshaw(a, basis.chart().to_t(x)); }

double CurveExpansion::odd(double x) const { return basis.fam_y().clenshaw(b, basis.chart().to_t(x)); }

double CurveExpansion::operator()(double x, double y) const { return even(x) + y * odd(x); }

CurveExpansion basis_member(const CurveBasis& basis, int n, int i) {
    const BasisTerm t = CurveBasis::term(n, i);
    CurveExpansion e{basis, {}, {}};
    auto& target = t.y_times ? e.b : e.a;
    target.assign(static_cast<std::size_t>(t.degree) + 1, 0.0);
    target.back() = 1.0;
    return e;
}

double inner_product(const CurveBasis& basis, const CurveFunction& f, const CurveFunction& g, int order) {
    const Nodes nd = curve_nodes(basis, order);
    double s = 0.0;
    for (std::size_t k = 0; k < nd.x.size(); ++k) {
        const double x = nd.x[k], y = nd.y[k];
        const double fp = f(x, y), fm = f(x, -y), gp = g(x, y), gm = g(x, -y);
        double v;
        if (basis.mode() == InnerMode::Angle) {
            v = fp * gp + fm * gm;
        } else {
            const double fe = 0.5 * (fp + fm), fo = (fp - fm) / (2.0 * y);
            const double ge = 0.5 * (gp + gm), go = (gp - gm) / (2.0 * y);
            v = fe * ge + fo * go;
        }
        if (!std::isfinite(v)) throw NumericalError("inner_product: non-finite integrand at x = " + std::to_string(x));
        s += nd.w[k] * v;
    }
    return s;
}

double inner_product(const CurveBasis& basis, const CurveExpansion& f, const CurveExpansion& g) {
    const auto na = static_cast<int>(f.a.size()), ma = static_cast<int>(g.a.size());
    const auto nb = static_cast<int>(f.b.size()), mb = static_cast<int>(g.b.size());
    const int extra = basis.mode() == InnerMode::Angle ? 3 : 0;
    int degree = 0;
    if (na > 0 && ma > 0) degree = std::max(degree, na + ma - 2);
    if (nb > 0 && mb > 0) degree = std::max(degree, nb + mb - 2 + extra);
    const int order = degree / 2 + 5;
    check_mode_size(basis.fam_x().degree_cap(), order, "inner_product");
    const Nodes nd = curve_nodes(basis, order);
    double s = 0.0;
    for (std::size_t k = 0; k < nd.x.size(); ++k) {
        const double fe = f.even(nd.x[k]), fo = f.odd(nd.x[k]);
        const double ge = g.even(nd.x[k]), go = g.odd(nd.x[k]);
        // Angle: (fe + y fo)(ge + y go) + (fe - y fo)(ge - y go) = 2 (fe ge + y^2 fo go)
        const double v = basis.mode() == InnerMode::Angle ? 2.0 * (fe * ge + nd.y[k] * nd.y[k] * fo * go)
                                                          : fe * ge + fo * go;
        s += nd.w[k] * v;
    }
    return s;
}

CurveExpansion fourier_coeffs(const CurveBasis& basis, const CurveFunction& f, int n, int order) {
    const int pc = CurveBasis::plain_cap(n), yc = CurveBasis::y_cap(n);
    check_mode_size(basis.max_degree(), pc, "fourier_coeffs");
    check_mode_size(basis.max_degree(), yc, "fourier_coeffs");
    if (order <= 0) order = basis.fam_x().degree_cap();
    const Nodes nd = curve_nodes(basis, order);
    const bool angle = basis.mode() == InnerMode::Angle;

    CurveExpansion s{basis, std::vector<double>(static_cast<std::size_t>(pc) + 1, 0.0),
                     std::vector<double>(static_cast<std::size_t>(yc) + 1, 0.0)};
    std::vector<double> p(s.a.size()), q(s.b.size());
    for (std::size_t k = 0; k < nd.x.size(); ++k) {
        const double x = nd.x[k], y = nd.y[k];
        const double fp = f(x, y), fm = f(x, -y);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw NumericalError("fourier_coeffs: non-finite sample at x = " + std::to_string(x));
        const double fe = 0.5 * (fp + fm), fo = (fp - fm) / (2.0 * y);
        basis.eval_families(x, p, q);
        for (std::size_t j = 0; j < p.size(); ++j) s.a[j] += nd.w[k] * fe * p[j];
        const double odd_weight = angle ? y * y * fo : fo;
        for (std::size_t j = 0; j < q.size(); ++j) s.b[j] += nd.w[k] * odd_weight * q[j];
    }
    for (std::size_t j = 0; j < s.a.size(); ++j) s.a[j] /= basis.fam_x().norm(static_cast<int>(j));
    for (std::size_t j = 0; j < s.b.size(); ++j) s.b[j] /= basis.fam_y().norm(static_cast<int>(j));
    return s;
}

double fourier_coefficient(const CurveExpansion& s, int n, int i) {
    const BasisTerm t = CurveBasis::term(n, i);
    const auto& v = t.y_times ? s.b : s.a;
    if (t.degree >= static_cast<int>(v.size())) throw IndexError("fourier_coefficient: expansion too short");
    return v[static_cast<std::size_t>(t.degree)];
}

double expansion_norm2(const CurveExpansion& e) {
    double s = 0.0;
    for (std::size_t k = 0; k < e.a.size(); ++k)
        s += e.a[k] * e.a[k] * e.basis.term_norm({false, static_cast<int>(k)});
    for (std::size_t k = 0; k < e.b.size(); ++k)
        s += e.b[k] * e.b[k] * e.basis.term_norm({true, static_cast<int>(k)});
    return s;
}

Eigen::VectorXd orthonormal_block(const CurveBasis& basis, int n, double x, double y) {
    const int m = CurveBasis::members(n);
    Eigen::VectorXd v(m);
    for (int i = 1; i <= m; ++i) v(i - 1) = basis.eval(n, i, x, y) / std::sqrt(basis.norm(n, i));
    return v;
}

JacobiOperators jacobi_operators(const CurveBasis& basis, int n_max) {
    if (basis.mode() != InnerMode::Angle)
        throw ParameterDomainError("jacobi_operators: the symmetric block form needs the Angle inner product");
    if (n_max < 0) throw IndexError("jacobi_operators: n_max must be >= 0");
    const int top = n_max + 1;
    const int D = CurveBasis::plain_cap(top);
    check_mode_size(basis.max_degree(), D, "jacobi_operators");
    const int order = D + 7;
    check_mode_size(basis.fam_x().degree_cap(), order, "jacobi_operators");
    const Nodes nd = curve_nodes(basis, order);

    // values[s][node] for s = +y / -y, blocks per degree
    struct Sample {
        double x, y, w;
        std::vector<Eigen::VectorXd> blocks;
    };
    std::vector<Sample> samples;
    for (std::size_t k = 0; k < nd.x.size(); ++k)
        for (double sgn : {1.0, -1.0}) {
            Sample s{nd.x[k], sgn * nd.y[k], nd.w[k], {}};
            for (int n = 0; n <= top; ++n) s.blocks.push_back(orthonormal_block(basis, n, s.x, s.y));
            samples.push_back(std::move(s));
        }

    JacobiOperators ops;
    for (int n = 0; n <= n_max; ++n) {
        const int r = CurveBasis::members(n), c = CurveBasis::members(n + 1);
        Eigen::MatrixXd Ax = Eigen::MatrixXd::Zero(r, c), Ay = Ax;
        Eigen::MatrixXd Bx = Eigen::MatrixXd::Zero(r, r), By = Bx;
        for (const Sample& s : samples) {
            const auto& cur = s.blocks[static_cast<std::size_t>(n)];
            const auto& next = s.blocks[static_cast<std::size_t>(n) + 1];
            Ax += s.w * s.x * cur * next.transpose();
            Ay += s.w * s.y * cur * next.transpose();
            Bx += s.w * s.x * cur * cur.transpose();
            By += s.w * s.y * cur * cur.transpose();
        }
        ops.Ax.push_back(Ax);
        ops.Bx.push_back(Bx);
        ops.Ay.push_back(Ay);
        ops.By.push_back(By);
    }
    return ops;
}

}  // namespace cubicop
