#include "cubicop/cubic_curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cubicop/errors.hpp"

namespace cubicop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double a, double b) { return std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)); }

std::string interval_text(const Interval& s) {
    std::ostringstream os;
    os << "[" << s.lo << ", " << (s.bounded() ? std::to_string(s.hi) : std::string("inf")) << "]";
    return os.str();
}

void finish(CubicCurve& curve) {
    const auto& r = curve.roots;
    const auto& coeffs = curve.coeffs;
    const double a0 = coeffs[0];
    if (r.size() == 1) {
        curve.curve_case = r[0].multiplicity == 3 ? CurveCase::Cusp : CurveCase::OneComponent;
        curve.omega = {{r[0].value, kInf}};
        if (r[0].multiplicity == 1) curve.quadratic_factor = curve.phi.deflate(r[0].value);
    } else if (r.size() == 2) {
        if (r[0].multiplicity == 2)
            throw DegeneracyError("classify: double root " + std::to_string(r[0].value) +
                                  " lies below the simple root, so it is an isolated point of the curve");
        curve.curve_case = CurveCase::Touching;
        curve.omega = {{r[0].value, r[1].value}, {r[1].value, kInf}};
    } else {
        curve.curve_case = CurveCase::TwoComponents;
        curve.omega = {{r[0].value, r[1].value}, {r[2].value, kInf}};
    }

    if (coeffs[1] == 0.0) {
        const double a = coeffs[2] / a0, b = coeffs[3] / a0;
        curve.elliptic_discriminant = -16.0 * (4.0 * a * a * a + 27.0 * b * b);
    }
}

}  // namespace

double CubicCurve::operator()(double x) const {
    if (!quadratic_factor.coeffs().empty()) return (x - roots[0].value) * quadratic_factor(x);
    double v = coeffs[0];
    for (const RealRoot& r : roots)
        for (int m = 0; m < r.multiplicity; ++m) v *= x - r.value;
    return v;
}

CubicCurve curve_from_roots(double a0, std::array<double, 3> roots) {
    if (!(a0 > 0.0) || !std::isfinite(a0)) throw ParameterDomainError("curve_from_roots: a0 must be positive and finite");
    for (double r : roots)
        if (!std::isfinite(r)) throw ParameterDomainError("curve_from_roots: roots must be finite");
    std::sort(roots.begin(), roots.end());
    CubicCurve curve;
    curve.phi = Polynomial::constant(a0);
    for (double r : roots) curve.phi = curve.phi * Polynomial::linear_root(r);
    curve.coeffs = {curve.phi.coeff(3), curve.phi.coeff(2), curve.phi.coeff(1), curve.phi.coeff(0)};
    for (double r : roots) {
        if (!curve.roots.empty() && curve.roots.back().value == r)
            ++curve.roots.back().multiplicity;
        else
            curve.roots.push_back({r, 1});
    }
    finish(curve);
    return curve;
}

std::string to_string(CurveCase c) {
    switch (c) {
        case CurveCase::OneComponent: return "OneComponent";
        case CurveCase::TwoComponents: return "TwoComponents";
        case CurveCase::Touching: return "Touching";
        case CurveCase::Cusp: return "Cusp";
    }
    return "?";
}

double CubicCurve::derivative(double x) const { return phi.derivative()(x); }

CubicCurve classify(const std::array<double, 4>& coeffs) {
    const double a0 = coeffs[0];
    if (a0 == 0.0) throw DegeneracyError("classify: leading coefficient a0 is zero, phi is not cubic");
    if (a0 < 0.0) throw ParameterDomainError("classify: a0 must be positive (substitute x -> -x)");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw ParameterDomainError("classify: coefficients must be finite");

    CubicCurve curve;
    curve.coeffs = coeffs;
    curve.phi = Polynomial{coeffs[3], coeffs[2], coeffs[1], coeffs[0]};
    curve.roots = real_roots(curve.phi * (1.0 / a0));
    finish(curve);
    return curve;
}

Interval CurveChart::canonical() const { return half_line() ? Interval{0.0, kInf} : Interval{-1.0, 1.0}; }

CurveChart chart(const CubicCurve& curve, Interval support, const FamilySpec& weight) {
    if (!(support.lo < support.hi))
        throw InvalidChartError("chart: empty support " + interval_text(support));
    const bool half = weight.kind == FamilyKind::Laguerre;
    if (weight.kind == FamilyKind::Modified) throw InvalidChartError("chart: weight must be a classical family");
    if (half == support.bounded())
        throw InvalidChartError(half ? "chart: Laguerre weight needs a support of the form [lo, inf)"
                                     : "chart: Jacobi-type weight needs a bounded support");

    bool inside = false;
    for (const Interval& c : curve.omega) {
        const bool lo_ok = support.lo >= c.lo - 1e-10 * (1.0 + std::abs(c.lo));
        const bool hi_ok = !c.bounded() || (support.bounded() && support.hi <= c.hi + 1e-10 * (1.0 + std::abs(c.hi)));
        if (lo_ok && hi_ok) inside = true;
    }
    if (!inside)
        throw InvalidChartError("chart: support " + interval_text(support) +
                                " is not inside one component of {phi > 0}");

    CurveChart ch;
    ch.curve = curve;
    ch.support = support;
    ch.weight = weight;
    if (half) {
        ch.offset = support.lo;
        ch.scale = 1.0;
    } else {
        ch.offset = 0.5 * (support.lo + support.hi);
        ch.scale = 0.5 * (support.hi - support.lo);
    }
    ch.phi_t = curve.phi.compose_affine(ch.offset, ch.scale);

    Polynomial rest = ch.phi_t;
    double sign = 1.0;
    for (const RealRoot& r : curve.roots) {
        if (near(r.value, support.lo)) {
            for (int m = 0; m < r.multiplicity; ++m) rest = rest.deflate(half ? 0.0 : -1.0);
            ch.j += r.multiplicity;
        } else if (support.bounded() && near(r.value, support.hi)) {
            for (int m = 0; m < r.multiplicity; ++m) {
                rest = rest.deflate(1.0);  // phi_t = (t - 1) q = (1 - t)(-q)
                sign = -sign;
            }
            ch.i += r.multiplicity;
        }
    }
    ch.cofactor = rest * sign;
    const double probe = half ? 1.0 : 0.0;
    if (!(ch.cofactor(probe) > 0.0))
        throw InvalidChartError("chart: phi is not positive inside the support " + interval_text(support));
    return ch;
}

std::pair<double, double> even_odd_split(const CubicCurve& curve, const CurveFunction& f, double x) {
    const double p = curve(x);
    if (!(p > 0.0)) throw DomainError("even_odd_split: phi(" + std::to_string(x) + ") <= 0");
    const double y = std::sqrt(p);
    const double plus = f(x, y), minus = f(x, -y);
    return {0.5 * (plus + minus), (plus - minus) / (2.0 * y)};
}

FamilySpec parse_weight(const std::string& kind, double alpha, double beta) {
    if (kind == "legendre") return FamilySpec::legendre();
    if (kind == "chebyshev" || kind == "chebyshev_t") return FamilySpec::chebyshev_t();
    if (kind == "jacobi") {
        if (!(alpha > -1.0 && beta > -1.0)) throw ParameterDomainError("weight: jacobi needs alpha, beta > -1");
        return FamilySpec::jacobi(alpha, beta);
    }
    if (kind == "laguerre") {
        if (!(alpha > -1.0)) throw ParameterDomainError("weight: laguerre needs alpha > -1");
        return FamilySpec::laguerre(alpha);
    }
    throw std::invalid_argument("weight: unknown kind '" + kind + "' (legendre, chebyshev, jacobi, laguerre)");
}

namespace {

CurveSpec parse_curve_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("phi")) throw std::invalid_argument("curve spec: missing \"phi\"");
    const auto& phi = j["phi"];
    if (!phi.is_array() || phi.size() != 4)
        throw std::invalid_argument("curve spec: \"phi\" must be [a0, a1, a2, a3]");

    CurveSpec spec;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!phi[k].is_number()) throw std::invalid_argument("curve spec: \"phi\" entries must be numbers");
        spec.phi[k] = phi[k].get<double>();
    }
    if (j.contains("support")) {
        const auto& s = j["support"];
        if (!s.is_array() || s.size() != 2 || !s[0].is_number())
            throw std::invalid_argument("curve spec: \"support\" must be [lo, hi] or [lo, \"inf\"]");
        Interval iv;
        iv.lo = s[0].get<double>();
        if (s[1].is_string() && s[1].get<std::string>() == "inf") {
            iv.hi = kInf;
        } else if (s[1].is_number()) {
            iv.hi = s[1].get<double>();
        } else {
            throw std::invalid_argument("curve spec: \"support\" must be [lo, hi] or [lo, \"inf\"]");
        }
        spec.support = iv;
    }
    if (j.contains("weight")) {
        const auto& w = j["weight"];
        if (!w.is_object() || !w.contains("kind") || !w["kind"].is_string())
            throw std::invalid_argument("curve spec: \"weight\" needs a string \"kind\"");
        spec.weight = parse_weight(w["kind"].get<std::string>(), w.value("alpha", 0.0), w.value("beta", 0.0));
    }
    return spec;
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& text_or_path) {
    std::string text = text_or_path;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("curve spec: empty input");
    if (text[first] != '{') {
        std::ifstream in(text_or_path);
        if (!in) throw std::invalid_argument("curve spec: cannot open '" + text_or_path + "'");
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return parse_curve_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("curve spec: ") + e.what());
    }
}

}  // namespace cubicop
