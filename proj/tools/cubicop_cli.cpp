// cubicop command-line front end. Exit codes: 0 ok, 2 parse/config error, 3 solve error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicop/collocation.hpp"
#include "cubicop/cubic_curve.hpp"
#include "cubicop/curve_quadrature.hpp"
#include "cubicop/errors.hpp"
#include "cubicop/experiments.hpp"

#ifndef CUBICOP_VERSION
#define CUBICOP_VERSION "0.0.0"
#endif

using namespace cubicop;
using nlohmann::ordered_json;

namespace {

constexpr int kConfigError = 2;
constexpr int kSolveError = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

// Collects CSV text and writes it once, to --out (plus a .json sidecar) or stdout.
class Output {
public:
    explicit Output(std::string path) : path_(std::move(path)) {}
    std::ostringstream& csv() { return csv_; }
    void finish(const ordered_json& config) const {
        if (path_.empty()) {
            std::cout << csv_.str();
            return;
        }
        std::ofstream out(path_, std::ios::binary);
        if (!out) throw ConfigError("cannot write '" + path_ + "'");
        out << csv_.str();
        ordered_json meta;
        meta["version"] = CUBICOP_VERSION;
        meta["config"] = config;
        std::ofstream side(path_ + ".json", std::ios::binary);
        if (!side) throw ConfigError("cannot write '" + path_ + ".json'");
        side << meta.dump(2) << "\n";
    }

private:
    std::string path_;
    std::ostringstream csv_;
};

InnerMode parse_mode(const std::string& s) {
    if (s == "angle") return InnerMode::Angle;
    if (s == "bracket") return InnerMode::Bracket;
    throw ConfigError("unknown mode '" + s + "' (angle|bracket)");
}

ordered_json interval_json(const Interval& s) {
    const double lo = s.lo + 0.0, hi = s.hi + 0.0;
    return s.bounded() ? ordered_json::array({lo, hi}) : ordered_json::array({lo, "inf"});
}

struct Options {
    std::string curve;
    std::string weight;
    double alpha = 0.0;
    double beta = 0.0;
    std::string mode = "bracket";
    int nmin = 1;
    int nmax = 10;
    int n = 20;
    double eps = 0.0;
    std::string out;
};

int cmd_classify(const Options& o) {
    if (o.curve.empty()) throw ConfigError("classify needs --curve");
    const CurveSpec spec = parse_curve_spec(o.curve);
    const CubicCurve c = classify(spec.phi);
    std::ostringstream s;
    if (c.curve_case == CurveCase::Cusp)
        s << "case: Touching-degenerate cusp at " << num(c.roots.front().value)
          << " (singular point, not an elliptic curve)\n";
    else
        s << "case: " << to_string(c.curve_case) << "\n";
    s << "roots:";
    for (const RealRoot& r : c.roots) s << " " << num(r.value) << (r.multiplicity > 1 ? "^" + std::to_string(r.multiplicity) : "");
    s << "\nomega:";
    for (const Interval& w : c.omega) s << " " << interval_json(w).dump();
    s << "\n";
    if (c.elliptic_discriminant) s << "elliptic_discriminant: " << num(*c.elliptic_discriminant) << "\n";
    std::cout << s.str();
    return 0;
}

void check_range(const Options& o) {
    if (o.nmin < 1) throw ConfigError("--nmin must be >= 1");
    if (!(o.eps >= 0.0) || !std::isfinite(o.eps)) throw ConfigError("--eps must be a finite number >= 0");
}

int cmd_approx(const Options& o) {
    check_range(o);
    Output out(o.out);
    out.csv() << "n,2N,max_error_curve,max_error_hp0,max_error_hp1,max_error_hp2,max_error_hp3\n";
    for (const ApproxRow& r : approx_sweep(o.eps, o.nmin, o.nmax)) {
        out.csv() << r.n << "," << r.samples << "," << num(r.err_curve);
        for (double e : r.err_hp) out.csv() << "," << num(e);
        out.csv() << "\n";
    }
    out.finish({{"command", "approx"}, {"eps", o.eps}, {"nmin", o.nmin}, {"nmax", o.nmax}});
    return 0;
}

int cmd_ellint(const Options& o) {
    check_range(o);
    if (o.n < 1) throw ConfigError("--n must be >= 1");
    const EllintResult r = ellint_solve(o.eps, o.n, parse_mode(o.mode));
    std::cerr << "value " << num(r.value) << "  2N " << 2 * r.solution.N << "  condition "
              << num(r.solution.condition) << "\n";
    Output out(o.out);
    out.csv() << "k,abs_a,abs_b\n";
    const auto& e = r.solution.expansion;
    for (std::size_t k = 0; k < e.a.size(); ++k) out.csv() << k << "," << num(std::abs(e.a[k])) << "," << num(std::abs(e.b[k])) << "\n";
    out.finish({{"command", "ellint"}, {"eps", o.eps}, {"n", o.n}, {"mode", o.mode}, {"value", r.value}});
    if (!o.out.empty()) std::cout << num(r.value) << "\n";
    return 0;
}

int cmd_ode2(const Options& o) {
    check_range(o);
    Output out(o.out);
    out.csv() << "n,2N,max_error_bracket,max_error_angle\n";
    for (int n = o.nmin; n <= o.nmax; ++n) {
        const Ode2Point b = ode2_point(InnerMode::Bracket, n), a = ode2_point(InnerMode::Angle, n);
        out.csv() << n << "," << b.samples << "," << num(b.max_error) << "," << num(a.max_error) << "\n";
    }
    out.finish({{"command", "ode2"}, {"nmin", o.nmin}, {"nmax", o.nmax}, {"c1", kExample2C1}, {"c2", kExample2C2}});
    return 0;
}

// I_n applied to Y_{k,i} Y_{l,j} with k + l <= 2n - 1 against the diagonal Gram matrix
int cmd_quadcheck(const Options& o) {
    if (o.curve.empty()) throw ConfigError("quadcheck needs --curve");
    if (o.nmin < 1) throw ConfigError("--nmin must be >= 1");
    const CurveSpec spec = parse_curve_spec(o.curve);
    const CubicCurve c = classify(spec.phi);
    if (!spec.support) throw ConfigError("quadcheck needs a support in the curve spec");
    FamilySpec w = spec.weight.value_or(FamilySpec::legendre());
    if (!o.weight.empty()) w = parse_weight(o.weight, o.alpha, o.beta);
    const CurveChart ch = chart(c, *spec.support, w);
    const CurveBasis basis(ch, parse_mode(o.mode), 2 * gauss_order_for(std::max(o.nmax, 1)) + 8);
    Output out(o.out);
    out.csv() << "n,N,max_relative_error\n";
    for (int n = o.nmin; n <= o.nmax; ++n) {
        const CurveQuadRule rule = curve_quadrature(basis, n);
        double worst = 0.0;
        for (int k = 0; k <= 2 * n - 1; ++k)
            for (int l = 0; k + l <= 2 * n - 1; ++l)
                for (int i = 1; i <= CurveBasis::members(k); ++i)
                    for (int j = 1; j <= CurveBasis::members(l); ++j) {
                        const double v = rule.integrate([&](double x, double y) { return basis.eval(k, i, x, y) * basis.eval(l, j, x, y); });
                        // Bracket is not self-adjoint, so only its product with Y_0 is known in closed form
                        if (basis.mode() == InnerMode::Bracket && k != 0 && l != 0) continue;
                        const double expect = (k == l && i == j && basis.mode() == InnerMode::Angle) ||
                                                      (k == 0 && l == 0)
                                                  ? basis.norm(k, i)
                                                  : 0.0;
                        const double scale = std::sqrt(basis.norm(k, i) * basis.norm(l, j));
                        worst = std::max(worst, std::abs(v - expect) / scale);
                    }
        out.csv() << n << "," << rule.N << "," << num(worst) << "\n";
    }
    out.finish({{"command", "quadcheck"}, {"phi", spec.phi}, {"support", interval_json(*spec.support)}, {"mode", o.mode},
                {"nmin", o.nmin}, {"nmax", o.nmax}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal polynomials on cubic curves: quadrature, approximation and collocation experiments"};
    app.require_subcommand(1);
    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Classify y^2 = phi(x): case, roots, Omega, discriminant");
    classify_cmd->add_option("--curve", o.curve, "Curve spec: inline JSON or path")->required();

    auto* approx_cmd = app.add_subcommand("approx", "Bessel example: curve interpolant vs Hermite-Pade errors");
    auto* ellint_cmd = app.add_subcommand("ellint", "Elliptic integral by collocation of y u' = 1");
    auto* ode2_cmd = app.add_subcommand("ode2", "Singular second-order ODE, both basis modes");
    auto* quad_cmd = app.add_subcommand("quadcheck", "Quadrature exactness on basis products");
    quad_cmd->add_option("--curve", o.curve, "Curve spec with support: inline JSON or path")->required();
    quad_cmd->add_option("--weight", o.weight, "legendre|chebyshev|jacobi|laguerre (overrides the weight given with --curve)");
    quad_cmd->add_option("--alpha", o.alpha, "Weight parameter alpha");
    quad_cmd->add_option("--beta", o.beta, "Weight parameter beta");

    for (auto* c : {approx_cmd, ode2_cmd, quad_cmd}) {
        c->add_option("--nmin", o.nmin, "First curve degree n of the sweep")->capture_default_str();
        c->add_option("--nmax", o.nmax, "Last curve degree n of the sweep")->capture_default_str();
    }
    for (auto* c : {approx_cmd, ellint_cmd}) c->add_option("--eps", o.eps, "epsilon >= 0")->capture_default_str();
    ellint_cmd->add_option("--n", o.n, "Curve degree n (2N unknowns)")->capture_default_str();
    for (auto* c : {ellint_cmd, quad_cmd}) c->add_option("--mode", o.mode, "angle|bracket")->capture_default_str();
    for (auto* c : {approx_cmd, ellint_cmd, ode2_cmd, quad_cmd}) c->add_option("--out", o.out, "CSV path (a .json sidecar is written next to it)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(o);
        if (approx_cmd->parsed()) return cmd_approx(o);
        if (ellint_cmd->parsed()) return cmd_ellint(o);
        if (ode2_cmd->parsed()) return cmd_ode2(o);
        if (quad_cmd->parsed()) return cmd_quadcheck(o);
    } catch (const NumericalError& e) {
        std::cerr << "solve error: " << e.what() << "\n";
        return kSolveError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}
