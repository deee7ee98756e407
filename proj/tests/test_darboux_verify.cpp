#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/special_curve.hpp"
#include "qd/system.hpp"
#include "qd/verify.hpp"

using namespace qd;

namespace {

BiPoly X() { return BiPoly::var_x(); }
BiPoly Y() { return BiPoly::var_y(); }
BiPoly C(long n, long d = 1) { return BiPoly::constant(Rational(n, d)); }
BiPoly M(const Rational& c, int i, int j) { return BiPoly::monomial(c, i, j); }

}  // namespace

TEST_CASE("cofactor extraction by exact division") {
    CllSystem S = cll_special_system(Rational(-1), Rational(1), Rational(1, 2));
    BiPoly P = S.sys.P(), Q = S.sys.Q();

    auto kx = extract_cofactor(P, Q, X());
    REQUIRE(kx.has_value());
    CHECK(*kx == C(1) - X());

    auto kx1 = extract_cofactor(P, Q, X() - C(1));
    REQUIRE(kx1.has_value());
    CHECK(*kx1 == -X());

    /* the bundled curve of the constant-p2 family carries cofactor y */
    FamilySpec h2 = FamilySpec::hermite_like(2);
    QuadraticSystem hs = derive_system(family_operator(h2), CofactorLine{});
    CurveBundle b = build_invariant_curve(classical_generator(h2), hs, CofactorLine{});
    auto ky = extract_cofactor(hs.P(), hs.Q(), b.g);
    REQUIRE(ky.has_value());
    CHECK(*ky == Y());

    /* a generic line is not invariant */
    CHECK_FALSE(extract_cofactor(hs.P(), hs.Q(), X() + Y()).has_value());
    CHECK_THROWS_AS(extract_cofactor(P, Q, C(3)), std::domain_error);
}

TEST_CASE("certificates: expected-cofactor path and extraction path") {
    FamilySpec f = FamilySpec::hermite_like(3, Rational(1), Rational(-1, 2));
    CofactorLine k{f.beta, f.gamma};
    QuadraticSystem s = derive_system(family_operator(f), k);
    CurveBundle b = build_invariant_curve(classical_generator(f), s, k);

    InvarianceCertificate good = verify_invariance(s.P(), s.Q(), b.g, k.poly());
    CHECK(good.pass);
    CHECK(good.residual.is_zero());
    REQUIRE(good.cofactor.has_value());
    CHECK(*good.cofactor == k.poly());

    InvarianceCertificate extracted = verify_invariance(s.P(), s.Q(), b.g);
    CHECK(extracted.pass);
    REQUIRE(extracted.cofactor.has_value());
    CHECK(*extracted.cofactor == k.poly());

    /* wrong expected cofactor: failing certificate, residual off by the
     * cofactor mismatch times the curve */
    InvarianceCertificate wrong = verify_invariance(s.P(), s.Q(), b.g, Y() + C(1));
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.residual == (X() - C(3, 2)) * b.g);

    /* non-invariant curve: no cofactor, remainder as residual */
    InvarianceCertificate bad = verify_invariance(s.P(), s.Q(), X() + Y());
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.cofactor.has_value());

    CHECK_THROWS_AS(verify_invariance(s.P(), s.Q(), C(1)), std::domain_error);
}

TEST_CASE("literal constant-p2 table fails invariance by exactly 2x at n = 1") {
    FamilySpec f = FamilySpec::hermite_like(1);
    QuadraticSystem lit = literal_system(f);
    QuadraticSystem can = derive_system(family_operator(f), CofactorLine{});
    CurveBundle b = build_invariant_curve(classical_generator(f), can, CofactorLine{});

    InvarianceCertificate cert =
        verify_invariance(lit.P(), lit.Q(), b.g, CofactorLine{}.poly());
    CHECK_FALSE(cert.pass);
    CHECK(cert.residual == M(Rational(2), 1, 0));
}

TEST_CASE("bundle equals its first-order form when p2 is constant") {
    for (int n = 1; n <= 25; ++n) {
        for (auto [bq, gq] : {std::pair{Rational(0), Rational(0)},
                              std::pair{Rational(1), Rational(0)},
                              std::pair{Rational(-1, 2), Rational(1, 3)}}) {
            FamilySpec f = FamilySpec::hermite_like(n, bq, gq);
            CofactorLine k{bq, gq};
            QuadraticSystem s = derive_system(family_operator(f), k);
            UniPoly a0 = classical_generator(f);
            CurveBundle b = build_invariant_curve(a0, s, k);
            CHECK(b.g == riccati_curve(a0, k));
        }
    }
}

TEST_CASE("exponent solving over cofactor coefficients") {
    BiPoly P = X(), Q = BiPoly::zero();
    BiPoly K = Y() + X() + C(1, 2);

    auto same = darboux_combination({K, K}, P, Q, DarbouxMode::FirstIntegral);
    REQUIRE(same.has_value());
    CHECK((*same)[0] == Rational(1));
    CHECK((*same)[1] == Rational(-1));

    CHECK_FALSE(darboux_combination({K}, P, Q, DarbouxMode::FirstIntegral).has_value());
    CHECK_FALSE(darboux_combination({}, P, Q, DarbouxMode::FirstIntegral).has_value());

    /* all-zero cofactors: canonical representative e_1 */
    auto zeros =
        darboux_combination({BiPoly::zero(), BiPoly::zero()}, P, Q, DarbouxMode::FirstIntegral);
    REQUIRE(zeros.has_value());
    CHECK((*zeros)[0] == Rational(1));
    CHECK((*zeros)[1] == Rational(0));

    /* factor mode: lambda * 1 = -div(x, 0) = -1 */
    auto fac = darboux_combination({C(1)}, P, Q, DarbouxMode::IntegratingFactor);
    REQUIRE(fac.has_value());
    CHECK((*fac)[0] == Rational(-1));

    /* factor mode, inconsistent: lambda * x = -1 has no solution */
    CHECK_FALSE(darboux_combination({X()}, P, Q, DarbouxMode::IntegratingFactor).has_value());
}

TEST_CASE("special-slice curve set: frozen members and exponents") {
    /* a = -1, b = 1, c = 1/2: series factor stays non-polynomial */
    DarbouxSystemSet small = cll_curve_set(Rational(-1), Rational(1), Rational(1, 2));
    REQUIRE(small.curves.size() == 4);
    CHECK(small.curves[0].name == "g1");
    CHECK(small.curves[0].poly == X());
    CHECK(small.curves[0].cofactor == C(1) - X());
    CHECK(small.curves[1].poly == X() - C(1));
    CHECK(small.curves[1].cofactor == -X());
    CHECK(small.curves[2].polynomial);
    CHECK(small.curves[2].poly == (C(1) - C(2) * X()) * Y() - C(2) * X() * X());
    CHECK(small.curves[2].cofactor == Y() + X() + C(1, 2));
    CHECK_FALSE(small.curves[3].polynomial);
    CHECK(small.curves[3].cofactor == Y() + M(Rational(3, 2), 1, 0));
    REQUIRE(small.relation_found);
    REQUIRE(small.exponents.size() == 4);
    CHECK(small.exponents[0] == Rational(-1, 2));  // c - 1
    CHECK(small.exponents[1] == Rational(0));
    CHECK(small.exponents[2] == Rational(1));
    CHECK(small.exponents[3] == Rational(-1));

    /* re-check the series member's certificate independently */
    CHECK(special_invariance_residual(small.curves[3].special, small.curves[3].cofactor,
                                      small.sys)
              .is_zero());
    CHECK_FALSE(
        special_invariance_residual(small.curves[3].special, Y(), small.sys).is_zero());

    /* a = -1, b = -2/3, c = 1/3: the second series terminates immediately,
     * so the fourth member closes to the line y - (8/3)x + 2/3 */
    DarbouxSystemSet poly4 = cll_curve_set(Rational(-1), Rational(-2, 3), Rational(1, 3));
    REQUIRE(poly4.curves.size() == 4);
    CHECK(poly4.curves[3].polynomial);
    CHECK(poly4.curves[3].poly == Y() - M(Rational(8, 3), 1, 0) + C(2, 3));
    CHECK(poly4.curves[3].cofactor == Y() - M(Rational(4), 1, 0));
    REQUIRE(poly4.relation_found);
    CHECK(poly4.exponents[0] == Rational(-2, 3));

    /* a = -4, b = 5/2, c = 1/3 */
    DarbouxSystemSet big = cll_curve_set(Rational(-4), Rational(5, 2), Rational(1, 3));
    REQUIRE(big.relation_found);
    CHECK_FALSE(big.curves[3].polynomial);
    CHECK(big.curves[3].cofactor == Y() + M(Rational(169, 6), 1, 0));
    CHECK(big.exponents == std::vector<Rational>{Rational(-2, 3), Rational(0), Rational(1),
                                                 Rational(-1)});
    /* the relation itself, re-summed by hand */
    BiPoly acc;
    for (size_t i = 0; i < 4; ++i) acc = acc + big.curves[i].cofactor * big.exponents[i];
    CHECK(acc.is_zero());

    CHECK_THROWS_AS(cll_curve_set(Rational(1, 2), Rational(1), Rational(1, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cll_curve_set(Rational(-1), Rational(1), Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("series-backed cofactor extraction on the general line bundles") {
    Rational a(-4), b(5, 2), c(1, 3);
    FamilySpec f = FamilySpec::hypergeometric(a, b, c);
    QuadraticSystem sys = derive_system(family_operator(f), CofactorLine{});
    UniPoly xmx2{Rational(0), Rational(1), Rational(-1)};

    /* bundle over the base-point series solution: cofactor y + beta x + gamma */
    SpecialCurve g1;
    g1.parts.push_back({a, b, c,
                        Y() + M(Rational(1) - a - b, 1, 0) + BiPoly::constant(c - Rational(1)),
                        BiPoly::from_x(xmx2)});
    auto k1 = special_extract_cofactor(g1, sys);
    REQUIRE(k1.has_value());
    CHECK(*k1 == Y());

    /* bundle over the second solution (x^(1-c) prefactor folded out):
     * cofactor y + (1-c)x + (c-1) */
    SpecialCurve g2;
    g2.parts.push_back({Rational(1) + a - c, Rational(1) + b - c, Rational(2) - c,
                        Y() + M(c - a - b, 1, 0), BiPoly::from_x(xmx2)});
    auto k2 = special_extract_cofactor(g2, sys);
    REQUIRE(k2.has_value());
    CHECK(*k2 == Y() + M(Rational(1) - c, 1, 0) + BiPoly::constant(c - Rational(1)));

    /* residual machinery rejects fields whose x-part is not x - x^2 */
    QuadraticSystem herm =
        derive_system(family_operator(FamilySpec::hermite_like(1)), CofactorLine{});
    CHECK_THROWS_AS(special_invariance_residual(g1, Y(), herm), std::domain_error);
    CHECK_THROWS_AS(special_extract_cofactor(SpecialCurve{}, sys), std::domain_error);

    /* a curve that is not invariant has no degree-1 cofactor */
    SpecialCurve junk;
    junk.parts.push_back({a, b, c, Y() + X(), BiPoly()});
    CHECK_FALSE(special_extract_cofactor(junk, sys).has_value());
}

TEST_CASE("audit: three families agree with their tables, one diverges") {
    auto all_clean = [](const std::vector<AuditReport>& reps) {
        for (const auto& r : reps) {
            if (!r.coefficient_diffs.empty()) return false;
            if (!r.canonical_invariance_pass || !r.literal_invariance_pass) return false;
            if (!r.literal_residual.is_zero()) return false;
        }
        return true;
    };

    CHECK(all_clean(audit_family(
        FamilySpec::laguerre(Rational(2), 1, Rational(1), Rational(1, 2)), 1, 6)));
    CHECK(all_clean(audit_family(
        FamilySpec::jacobi(Rational(1, 2), Rational(0), 1, Rational(-1, 2), Rational(1, 3)), 1,
        6)));
    CHECK(all_clean(audit_family(
        FamilySpec::hypergeometric(Rational(-1), Rational(5, 2), Rational(1, 3), Rational(1),
                                   Rational(0)),
        1, 6)));

    /* constant-p2 family at beta = 0, gamma = 1: exactly q21 and q20 differ */
    auto h = audit_family(FamilySpec::hermite_like(1, Rational(0), Rational(1)), 1, 6);
    REQUIRE(h.size() == 6);
    for (const auto& r : h) {
        REQUIRE(r.coefficient_diffs.size() == 2);
        CHECK(r.coefficient_diffs.count("q21") == 1);
        CHECK(r.coefficient_diffs.count("q20") == 1);
        CHECK(r.coefficient_diffs.at("q21").canonical == Rational(-1));
        CHECK(r.coefficient_diffs.at("q21").literal == Rational(-2));
        CHECK(r.canonical_invariance_pass);
        CHECK_FALSE(r.literal_invariance_pass);
        CHECK_FALSE(r.notes.empty());
    }
    CHECK(h[0].coefficient_diffs.at("q20").canonical == Rational(3));   // n + 2
    CHECK(h[0].coefficient_diffs.at("q20").literal == Rational(5));     // 2n + 3

    /* at the zero line, n = 1, the literal residual is the polynomial 2x */
    auto h0 = audit_family(FamilySpec::hermite_like(1), 1, 1);
    REQUIRE(h0.size() == 1);
    CHECK(h0[0].literal_residual == M(Rational(2), 1, 0));

    CHECK_THROWS_AS(audit_family(FamilySpec::hermite_like(1), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(audit_family(FamilySpec::hermite_like(1), 3, 2), std::invalid_argument);
}
