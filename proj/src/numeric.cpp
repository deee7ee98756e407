#include "qd/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qd/hyp2f1.hpp"

namespace qd {

namespace {

/* double-precision view of the field for the integrator hot loop */
struct Field {
    double p22, p21, p20, q11, q10, q22, q21, q20;

    explicit Field(const QuadraticSystem& s)
        : p22(s.p22.to_double()),
          p21(s.p21.to_double()),
          p20(s.p20.to_double()),
          q11(s.q11.to_double()),
          q10(s.q10.to_double()),
          q22(s.q22.to_double()),
          q21(s.q21.to_double()),
          q20(s.q20.to_double()) {}

    double fx(double x) const { return (p22 * x + p21) * x + p20; }
    double fy(double x, double y) const {
        return y * y + (q11 * x + q10) * y + (q22 * x + q21) * x + q20;
    }
};

/* Sum of |term| magnitudes: the cancellation scale of an evaluation. A value
 * far below it is numerically indistinguishable from zero. */
double poly_magnitude(const BiPoly& p, double x, double y) {
    double m = 0.0;
    for (const auto& [e, c] : p.terms())
        m += std::fabs(c.to_double()) * std::pow(std::fabs(x), e.i) * std::pow(std::fabs(y), e.j);
    return m;
}

double curve_magnitude(const CurveRep& r, double x, double y) {
    if (r.polynomial) return poly_magnitude(r.poly, x, y);
    double m = poly_magnitude(r.special.unit, x, y);
    for (const auto& p : r.special.parts) {
        if (!p.cf.is_zero())
            m += poly_magnitude(p.cf, x, y) * std::fabs(eval_2f1(p.a, p.b, p.c, x));
        if (!p.cdf.is_zero())
            m += poly_magnitude(p.cdf, x, y) * std::fabs(eval_2f1_derivative(p.a, p.b, p.c, x));
    }
    return m;
}

bool guard_ok(double x, double y, const IntegrateOptions& opt, TrajectoryEnd& why) {
    if (!std::isfinite(x) || !std::isfinite(y) || std::fabs(y) > opt.blowup) {
        why = TrajectoryEnd::Blowup;
        return false;
    }
    if (opt.unit_interval_guard && (x <= opt.delta || x >= 1.0 - opt.delta)) {
        why = TrajectoryEnd::LeftDomain;
        return false;
    }
    return true;
}

}  // namespace

Trajectory integrate_trajectory(const QuadraticSystem& sys, double x0, double y0, double h,
                                double T, const IntegrateOptions& opt) {
    if (!(h > 0) || !(T > 0)) throw std::invalid_argument("integrate_trajectory: h, T > 0");
    Field f(sys);
    Trajectory tr;
    TrajectoryEnd why = TrajectoryEnd::Completed;
    double x = x0, y = y0;
    if (!guard_ok(x, y, opt, why)) {
        tr.terminated = why;
        return tr;
    }
    tr.samples.push_back({0.0, x, y});
    const long long steps = std::llround(T / h);
    for (long long i = 0; i < steps; ++i) {
        const double k1x = f.fx(x), k1y = f.fy(x, y);
        const double k2x = f.fx(x + 0.5 * h * k1x), k2y = f.fy(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
        const double k3x = f.fx(x + 0.5 * h * k2x), k3y = f.fy(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
        const double k4x = f.fx(x + h * k3x), k4y = f.fy(x + h * k3x, y + h * k3y);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        if (!guard_ok(x, y, opt, why)) {
            tr.terminated = why;
            return tr;
        }
        tr.samples.push_back({static_cast<double>(i + 1) * h, x, y});
    }
    tr.terminated = TrajectoryEnd::Completed;
    return tr;
}

double FirstIntegralSpec::eval_abs(double x, double y) const {
    double F = 1.0;
    for (const auto& fac : factors)
        F *= std::pow(std::fabs(fac.curve.eval(x, y)), fac.exponent.to_double());
    return F;
}

bool FirstIntegralSpec::needs_unit_interval() const {
    for (const auto& fac : factors)
        if (!fac.curve.polynomial || !fac.exponent.is_integer()) return true;
    return false;
}

FirstIntegralSpec integral_from_set(const DarbouxSystemSet& set) {
    if (!set.relation_found || set.exponents.size() != set.curves.size())
        throw std::invalid_argument("integral_from_set: set has no verified exponents");
    FirstIntegralSpec spec;
    for (size_t i = 0; i < set.curves.size(); ++i) {
        if (set.exponents[i].is_zero()) continue;
        spec.factors.push_back({set.curves[i], set.exponents[i]});
    }
    return spec;
}

std::vector<std::pair<double, double>> standard_seeds() {
    std::vector<std::pair<double, double>> out;
    for (double x0 : {0.2, 0.5, 0.8})
        for (double y0 : {-1.0, 0.0, 1.0, 2.0}) out.emplace_back(x0, y0);
    return out;
}

DriftReport drift_report(const QuadraticSystem& sys, const FirstIntegralSpec& spec,
                         const std::vector<std::pair<double, double>>& seeds, double h,
                         double T, double tol, double window) {
    DriftReport rep;
    rep.h = h;
    rep.T = T;
    rep.tol = tol;
    rep.window = window;
    IntegrateOptions opt;
    opt.unit_interval_guard = spec.needs_unit_interval();

    for (const auto& [x0, y0] : seeds) {
        SeedDrift sd;
        sd.x0 = x0;
        sd.y0 = y0;
        Trajectory tr = integrate_trajectory(sys, x0, y0, h, T, opt);

        std::vector<int> sign0(spec.factors.size(), 0);
        double F0 = 0.0, maxdrift = 0.0;
        size_t used = 0;
        std::string fail;
        for (const auto& s : tr.samples) {
            if (std::fabs(s.y) > window) break;
            double F = 1.0;
            for (size_t i = 0; i < spec.factors.size() && fail.empty(); ++i) {
                double v;
                try {
                    v = spec.factors[i].curve.eval(s.x, s.y);
                } catch (const std::exception&) {
                    fail = "series-error";
                    break;
                }
                if (!std::isfinite(v)) {
                    fail = "nonfinite";
                    break;
                }
                const int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
                /* seeds sitting on a factor's zero set evaluate to pure
                 * cancellation noise rather than exact zero; classify by
                 * comparing against the term-magnitude scale */
                if (sg == 0 ||
                    (used == 0 && std::fabs(v) <= 1e-12 * curve_magnitude(spec.factors[i].curve,
                                                                          s.x, s.y))) {
                    fail = "factor-zero";
                    break;
                }
                if (used == 0)
                    sign0[i] = sg;
                else if (sg != sign0[i]) {
                    fail = "factor-sign-change";
                    break;
                }
                F *= std::pow(std::fabs(v), spec.factors[i].exponent.to_double());
            }
            if (!fail.empty()) break;
            if (!std::isfinite(F)) {
                fail = "nonfinite";
                break;
            }
            if (used == 0) {
                if (std::fabs(F) < 1e-300) {
                    fail = "initial-value-zero";
                    break;
                }
                F0 = F;
            } else {
                maxdrift = std::max(maxdrift, std::fabs(F - F0) / std::fabs(F0));
            }
            ++used;
        }
        sd.samples_used = used;
        if (!fail.empty())
            sd.status = fail;
        else if (used < 2)
            sd.status = "window-too-short";
        else {
            sd.status = "ok";
            sd.drift = maxdrift;
            rep.ok_count++;
            rep.max_drift = std::max(rep.max_drift, maxdrift);
        }
        rep.seeds.push_back(std::move(sd));
    }
    rep.pass = rep.ok_count > 0 && rep.max_drift <= tol;
    return rep;
}

OrderCheck halving_check(const QuadraticSystem& sys, const FirstIntegralSpec& spec,
                         const std::vector<std::pair<double, double>>& seeds, double h,
                         double T, double tol, double window) {
    OrderCheck oc;
    oc.at_h = drift_report(sys, spec, seeds, h, T, tol, window);
    oc.at_half = drift_report(sys, spec, seeds, h / 2.0, T, tol, window);
    double mh = 0.0, mh2 = 0.0;
    bool any = false;
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (oc.at_h.seeds[i].status != "ok" || oc.at_half.seeds[i].status != "ok") continue;
        any = true;
        mh = std::max(mh, oc.at_h.seeds[i].drift);
        mh2 = std::max(mh2, oc.at_half.seeds[i].drift);
    }
    oc.ratio = (any && mh2 > 0.0) ? mh / mh2 : 0.0;
    return oc;
}

namespace {

CurveRep special_rep(std::string name, SpecialCurve g) {
    CurveRep r;
    r.name = std::move(name);
    r.polynomial = false;
    r.special = std::move(g);
    return r;
}

CurveRep poly_rep(std::string name, BiPoly g) {
    CurveRep r;
    r.name = std::move(name);
    r.polynomial = true;
    r.poly = std::move(g);
    return r;
}

}  // namespace

FirstIntegralSpec transcribed_integral(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& beta, const Rational& gamma,
                                       const std::string& reading) {
    const Rational one(1), two(2);
    Rational p1, p2;
    if (reading == "v1") {
        p1 = one + a - c;
        p2 = two + a - c;
    } else if (reading == "v2") {
        p1 = one + a + c;
        p2 = two + a + c;
    } else {
        throw std::invalid_argument("transcribed_integral: reading must be v1 or v2");
    }

    BiPoly lin = BiPoly::var_y() + BiPoly::monomial(one - b + beta, 1, 0) +
                 BiPoly::constant(gamma + c - one - a);
    BiPoly one_minus_x = BiPoly::constant(one) - BiPoly::var_x();
    const Rational unit = one + a - c;

    SpecialCurve g1;
    g1.unit = BiPoly::constant(unit);
    g1.parts.push_back({p1, one + b - c, two - c, lin, BiPoly()});
    g1.parts.push_back({one + a, b, c, one_minus_x * unit, BiPoly()});
    SpecialCurve g2;
    g2.unit = BiPoly::constant(unit);
    g2.parts.push_back({a, b, c, lin, BiPoly()});
    g2.parts.push_back({p2, one + b - c, two - c, one_minus_x * a, BiPoly()});

    FirstIntegralSpec spec;
    spec.factors.push_back({poly_rep("x", BiPoly::var_x()), one - c});
    spec.factors.push_back({special_rep("g1", std::move(g1)), one});
    spec.factors.push_back({special_rep("g2", std::move(g2)), -one});
    return spec;
}

FirstIntegralSpec derived_general_integral(const Rational& a, const Rational& b,
                                           const Rational& c, const Rational& beta,
                                           const Rational& gamma, const QuadraticSystem& sys) {
    const Rational one(1), two(2);
    /* solution bundles w*(y + s-part) + p2*w' over the two local series
     * solutions; the x^(1-c) prefactor of the second one is shifted into
     * the exponent of the x factor */
    UniPoly xmx2{Rational(0), Rational(1), Rational(-1)};
    SpecialCurve gh1;
    gh1.parts.push_back({a, b, c,
                         BiPoly::var_y() + BiPoly::monomial(beta + one - a - b, 1, 0) +
                             BiPoly::constant(gamma + c - one),
                         BiPoly::from_x(xmx2)});
    SpecialCurve gh2;
    gh2.parts.push_back({one + a - c, one + b - c, two - c,
                         BiPoly::var_y() + BiPoly::monomial(beta + c - a - b, 1, 0) +
                             BiPoly::constant(gamma),
                         BiPoly::from_x(xmx2)});

    auto k1 = special_extract_cofactor(gh1, sys);
    auto k2 = special_extract_cofactor(gh2, sys);
    auto kx = extract_cofactor(sys.P(), sys.Q(), BiPoly::var_x());
    if (!k1 || !k2 || !kx)
        throw std::logic_error("derived_general_integral: factor certification failed");
    auto lam = darboux_combination({*kx, *k2, *k1}, sys.P(), sys.Q(), DarbouxMode::FirstIntegral);
    if (!lam) throw std::logic_error("derived_general_integral: no exponent relation found");

    FirstIntegralSpec derived;
    derived.factors.push_back({poly_rep("x", BiPoly::var_x()), (*lam)[0]});
    derived.factors.push_back({special_rep("ref2", std::move(gh2)), (*lam)[1]});
    derived.factors.push_back({special_rep("ref1", std::move(gh1)), (*lam)[2]});
    return derived;
}

AmbiguityReport ambiguity_report(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& beta, const Rational& gamma, double h,
                                 double T, double tol) {
    AmbiguityReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.beta = beta;
    rep.gamma = gamma;
    rep.h = h;
    rep.T = T;
    rep.tol = tol;

    FamilySpec f = FamilySpec::hypergeometric(a, b, c, beta, gamma);
    CofactorLine k{beta, gamma};
    QuadraticSystem sys = derive_system(family_operator(f), k);

    FirstIntegralSpec v1 = transcribed_integral(a, b, c, beta, gamma, "v1");
    FirstIntegralSpec v2 = transcribed_integral(a, b, c, beta, gamma, "v2");
    FirstIntegralSpec derived = derived_general_integral(a, b, c, beta, gamma, sys);

    auto seeds = standard_seeds();
    rep.variants.push_back({"v1", drift_report(sys, v1, seeds, h, T, tol)});
    rep.variants.push_back({"v2", drift_report(sys, v2, seeds, h, T, tol)});
    rep.variants.push_back({"derived", drift_report(sys, derived, seeds, h, T, tol)});

    const bool p1 = rep.variants[0].report.pass;
    const bool p2v = rep.variants[1].report.pass;
    rep.passing = p1 && p2v ? "both" : (p1 ? "v1" : (p2v ? "v2" : "neither"));
    rep.harness_validated = rep.variants[2].report.pass;
    return rep;
}

std::vector<LevelRow> level_samples(const std::function<double(double, double)>& f, double x0,
                                    double x1, double y0, double y1, int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("level_samples: grid must be >= 2x2");
    std::vector<LevelRow> rows;
    rows.reserve(static_cast<size_t>(nx) * static_cast<size_t>(ny));
    for (int jy = 0; jy < ny; ++jy) {
        const double y = y0 + (y1 - y0) * jy / (ny - 1);
        for (int ix = 0; ix < nx; ++ix) {
            const double x = x0 + (x1 - x0) * ix / (nx - 1);
            LevelRow row{x, y, std::nullopt};
            try {
                const double v = f(x, y);
                if (std::isfinite(v)) row.f = v;
            } catch (const std::exception&) {
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace qd
