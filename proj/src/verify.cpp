#include "qd/verify.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "qd/hyp2f1.hpp"
#include "qd/linalg.hpp"

namespace qd {

std::optional<BiPoly> extract_cofactor(const BiPoly& P, const BiPoly& Q, const BiPoly& g) {
    if (g.total_degree() < 1)
        throw std::domain_error("extract_cofactor: curve must be nonconstant");
    return bipoly_exact_div(lie_derivative(P, Q, g), g);
}

InvarianceCertificate verify_invariance(const BiPoly& P, const BiPoly& Q, const BiPoly& g,
                                        const std::optional<BiPoly>& expected_cofactor) {
    if (g.total_degree() < 1)
        throw std::domain_error("verify_invariance: curve must be nonconstant");
    InvarianceCertificate cert;
    cert.P = P;
    cert.Q = Q;
    cert.curve = g;
    BiPoly xg = lie_derivative(P, Q, g);
    if (expected_cofactor) {
        cert.cofactor = *expected_cofactor;
        cert.residual = xg - *expected_cofactor * g;
    } else {
        BiDivision d = bipoly_divmod(xg, g);
        if (d.remainder.is_zero() && xg == d.quotient * g) {
            cert.cofactor = d.quotient;
            cert.residual = BiPoly();
        } else {
            cert.residual = d.remainder;
        }
    }
    cert.pass = cert.residual.is_zero() && cert.cofactor.has_value() &&
                cert.cofactor->total_degree() <= 1;
    return cert;
}

std::optional<BiPoly> special_extract_cofactor(const SpecialCurve& g,
                                               const QuadraticSystem& sys) {
    bool empty = g.unit.is_zero();
    for (const auto& p : g.parts) empty = empty && p.cf.is_zero() && p.cdf.is_zero();
    if (empty) throw std::domain_error("special_extract_cofactor: zero curve");

    /* residual(K) = residual(0) - (K*unit, {K*cf_k, K*cdf_k}), so with the
     * ansatz K = k0 + k1 x + k2 y the zero-residual condition is a linear
     * system over the stacked monomial coefficients. */
    SpecialResidual base = special_invariance_residual(g, BiPoly(), sys);

    std::vector<const BiPoly*> comps{&base.unit};
    std::vector<const BiPoly*> mults{&g.unit};
    for (size_t k = 0; k < g.parts.size(); ++k) {
        comps.push_back(&base.parts[k].first);
        mults.push_back(&g.parts[k].cf);
        comps.push_back(&base.parts[k].second);
        mults.push_back(&g.parts[k].cdf);
    }

    const BiPoly kmono[3] = {BiPoly::constant(Rational(1)), BiPoly::var_x(), BiPoly::var_y()};
    RatMat A;
    RatVec b;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        BiPoly prod[3];
        std::set<Exp2, GrlexLess> expo;
        for (int j = 0; j < 3; ++j) {
            prod[j] = kmono[j] * (*mults[ci]);
            for (const auto& [e, c] : prod[j].terms()) expo.insert(e);
        }
        for (const auto& [e, c] : comps[ci]->terms()) expo.insert(e);
        for (const Exp2& e : expo) {
            RatVec row(3);
            for (int j = 0; j < 3; ++j) row[j] = prod[j].coeff(e.i, e.j);
            A.push_back(std::move(row));
            b.push_back(comps[ci]->coeff(e.i, e.j));
        }
    }

    auto sol = solve_particular(A, b);
    if (!sol) return std::nullopt;
    BiPoly K = BiPoly::constant((*sol)[0]) + BiPoly::monomial((*sol)[1], 1, 0) +
               BiPoly::monomial((*sol)[2], 0, 1);
    if (!special_invariance_residual(g, K, sys).is_zero())
        throw std::logic_error("special_extract_cofactor: solution failed re-certification");
    return K;
}

std::optional<std::vector<Rational>> darboux_combination(const std::vector<BiPoly>& cofactors,
                                                         const BiPoly& P, const BiPoly& Q,
                                                         DarbouxMode mode) {
    if (cofactors.empty()) return std::nullopt;
    const size_t m = cofactors.size();
    BiPoly rhs;
    if (mode == DarbouxMode::IntegratingFactor) rhs = -(P.dx() + Q.dy());

    std::set<Exp2, GrlexLess> expo;
    for (const auto& k : cofactors)
        for (const auto& [e, c] : k.terms()) expo.insert(e);
    for (const auto& [e, c] : rhs.terms()) expo.insert(e);

    std::vector<Rational> lam;
    if (expo.empty()) {
        /* every cofactor (and rhs) is zero: lambda = e_1 is the canonical
         * representative in first-integral mode, zero in factor mode */
        lam.assign(m, Rational(0));
        if (mode == DarbouxMode::FirstIntegral) lam[0] = Rational(1);
    } else {
        RatMat A;
        RatVec b;
        for (const Exp2& e : expo) {
            RatVec row(m);
            for (size_t i = 0; i < m; ++i) row[i] = cofactors[i].coeff(e.i, e.j);
            A.push_back(std::move(row));
            b.push_back(rhs.coeff(e.i, e.j));
        }
        if (mode == DarbouxMode::FirstIntegral) {
            auto basis = kernel_basis(A);
            if (basis.empty()) return std::nullopt;
            lam = basis.front();
            if (!lam.back().is_zero()) {
                Rational s = Rational(-1) / lam.back();
                for (auto& v : lam) v = v * s;
            } else {
                for (const auto& v : lam)
                    if (!v.is_zero()) {
                        Rational s = Rational(1) / v;
                        for (auto& w : lam) w = w * s;
                        break;
                    }
            }
        } else {
            auto sol = solve_particular(A, b);
            if (!sol) return std::nullopt;
            lam = *sol;
        }
    }

    BiPoly acc;
    for (size_t i = 0; i < m; ++i) acc = acc + cofactors[i] * lam[i];
    if (!(acc - rhs).is_zero())
        throw std::logic_error("darboux_combination: re-substitution failed");
    return lam;
}

DarbouxSystemSet cll_curve_set(const Rational& a, const Rational& b, const Rational& c) {
    if (!is_nonpositive_integer(a) || a.is_zero())
        throw std::invalid_argument("cll_curve_set: a must be a negative integer");
    if (c.is_integer()) throw std::invalid_argument("cll_curve_set: c must not be an integer");

    CllSystem S = cll_special_system(a, b, c);
    BiPoly P = S.sys.P();
    BiPoly Q = S.sys.Q();
    UniPoly xmx2{Rational(0), Rational(1), Rational(-1)};  // x - x^2

    DarbouxSystemSet out;
    out.sys = S.sys;
    out.mode = DarbouxMode::FirstIntegral;

    auto add_poly = [&](const std::string& name, const BiPoly& g) {
        auto K = extract_cofactor(P, Q, g);
        if (!K) throw std::logic_error("cll_curve_set: " + name + " is not invariant");
        CurveRep r;
        r.name = name;
        r.polynomial = true;
        r.poly = g;
        r.cofactor = *K;
        out.curves.push_back(std::move(r));
    };

    add_poly("g1", BiPoly::var_x());
    add_poly("g2", BiPoly::var_x() - BiPoly::constant(Rational(1)));

    Rational abc = a * b / c;
    UniPoly F1 = series_2f1_poly(a, b, c);
    BiPoly g3 = BiPoly::from_x(F1) * (BiPoly::var_y() - BiPoly::monomial(abc, 1, 0)) +
                BiPoly::from_x(xmx2 * F1.derivative());
    add_poly("g3", g3);

    Rational one(1), two(2);
    Rational a2 = one + a - c, b2 = one + b - c, c2 = two - c;
    BiPoly coef4 = BiPoly::var_y() - BiPoly::monomial(abc + one - c, 1, 0) +
                   BiPoly::constant(one - c);
    if (is_nonpositive_integer(a2) || is_nonpositive_integer(b2)) {
        UniPoly F2 = series_2f1_poly(a2, b2, c2);
        BiPoly g4 = BiPoly::from_x(F2) * coef4 + BiPoly::from_x(xmx2 * F2.derivative());
        add_poly("g4", g4);
    } else {
        SpecialCurve g4;
        SpecialPart part;
        part.a = a2;
        part.b = b2;
        part.c = c2;
        part.cf = coef4;
        part.cdf = BiPoly::from_x(xmx2);
        g4.parts.push_back(std::move(part));
        auto K = special_extract_cofactor(g4, S.sys);
        if (!K) throw std::logic_error("cll_curve_set: no degree-1 cofactor for g4");
        CurveRep r;
        r.name = "g4";
        r.polynomial = false;
        r.special = std::move(g4);
        r.cofactor = *K;
        out.curves.push_back(std::move(r));
    }

    std::vector<BiPoly> Ks;
    for (const auto& cr : out.curves) Ks.push_back(cr.cofactor);
    auto lam = darboux_combination(Ks, P, Q, DarbouxMode::FirstIntegral);
    if (lam) {
        out.exponents = *lam;
        out.relation_found = true;
    }
    return out;
}

BiPoly riccati_curve(const UniPoly& a0, const CofactorLine& k) {
    BiPoly lin = BiPoly::var_y() + BiPoly::monomial(k.beta - Rational(1), 1, 0) +
                 BiPoly::constant(k.gamma);
    return lin * BiPoly::from_x(a0) + BiPoly::from_x(a0.derivative());
}

std::vector<AuditReport> audit_family(const FamilySpec& base, int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("audit_family: need 1 <= n_min <= n_max");
    std::vector<AuditReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        FamilySpec f = with_degree(base, n);
        AuditReport rep;
        rep.family = f;
        CofactorLine k{f.beta, f.gamma};
        rep.canonical = derive_system(family_operator(f), k);
        rep.literal = literal_system(f);

        static const std::pair<const char*, Rational QuadraticSystem::*> kFields[] = {
            {"p22", &QuadraticSystem::p22}, {"p21", &QuadraticSystem::p21},
            {"p20", &QuadraticSystem::p20}, {"q11", &QuadraticSystem::q11},
            {"q10", &QuadraticSystem::q10}, {"q22", &QuadraticSystem::q22},
            {"q21", &QuadraticSystem::q21}, {"q20", &QuadraticSystem::q20},
        };
        for (const auto& [name, mem] : kFields) {
            if (rep.canonical.*mem != rep.literal.*mem)
                rep.coefficient_diffs.emplace(name,
                                              CoefficientDiff{rep.canonical.*mem, rep.literal.*mem});
        }

        UniPoly a0 = classical_generator(f);
        CurveBundle bundle = build_invariant_curve(a0, rep.canonical, k);
        BiPoly K = k.poly();
        InvarianceCertificate can =
            verify_invariance(rep.canonical.P(), rep.canonical.Q(), bundle.g, K);
        if (!can.pass)
            throw std::logic_error("audit_family: canonical system failed its own invariance");
        rep.canonical_invariance_pass = true;

        InvarianceCertificate lit =
            verify_invariance(rep.literal.P(), rep.literal.Q(), bundle.g, K);
        rep.literal_invariance_pass = lit.pass;
        rep.literal_residual = lit.residual;

        if (f.kind == FamilySpec::Kind::HermiteLike)
            rep.notes =
                "literal table disagrees with the canonical derivation in q21 and q20 "
                "for general (beta, gamma), and in q22 unless beta = 0; the variant "
                "transcription q21 = gamma*(2*beta-1) matches the canonical value";

        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace qd
