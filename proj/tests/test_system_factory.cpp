#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qd/families.hpp"
#include "qd/system.hpp"

using namespace qd;

namespace {

QuadraticSystem canonical(const FamilySpec& f) {
    return derive_system(family_operator(f), CofactorLine{f.beta, f.gamma});
}

bool same_q_table(const QuadraticSystem& a, const QuadraticSystem& b) {
    return a == b;
}

}  // namespace

TEST_CASE("constant-p2 family, frozen small systems and curves") {
    /* n = 1, zero line: x' = 1, y' = y^2 - xy + 2, curve xy - x^2 + 1 */
    FamilySpec f1 = FamilySpec::hermite_like(1);
    QuadraticSystem s1 = canonical(f1);
    CHECK(s1.p2() == UniPoly{Rational(1)});
    CHECK(s1.q1() == UniPoly{Rational(0), Rational(-1)});
    CHECK(s1.q2() == UniPoly{Rational(2)});

    CurveBundle b1 = build_invariant_curve(classical_generator(f1), s1, CofactorLine{});
    CHECK(b1.a0 == UniPoly{Rational(0), Rational(1)});
    CHECK(b1.a1 == UniPoly{Rational(1), Rational(0), Rational(-1)});
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    CHECK(b1.g == x * y - x * x + BiPoly::constant(Rational(1)));
    CHECK(b1.degree == 2);

    /* n = 2: y' = y^2 - xy + 3, curve (x^2-1)y + 3x - x^3 */
    FamilySpec f2 = FamilySpec::hermite_like(2);
    QuadraticSystem s2 = canonical(f2);
    CHECK(s2.q2() == UniPoly{Rational(3)});
    CurveBundle b2 = build_invariant_curve(classical_generator(f2), s2, CofactorLine{});
    CHECK(b2.g == (x * x - BiPoly::constant(Rational(1))) * y +
                      BiPoly::from_x(UniPoly{Rational(0), Rational(3), Rational(0), Rational(-1)}));
    CHECK(b2.degree == 3);

    /* general line: q22 = b^2-b, q21 = g(2b-1), q20 = g^2-b+n+1 */
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(-4, 4);
    for (int it = 0; it < 10; ++it) {
        Rational be(pick(rng)), ga(pick(rng), 3);
        int n = 1 + it % 6;
        QuadraticSystem s = canonical(FamilySpec::hermite_like(n, be, ga));
        CHECK(s.q22 == be * be - be);
        CHECK(s.q21 == ga * (Rational(2) * be - Rational(1)));
        CHECK(s.q20 == ga * ga - be + Rational(n + 1));
        CHECK(s.q11 == Rational(2) * be - Rational(1));
        CHECK(s.q10 == Rational(2) * ga);
    }
}

TEST_CASE("linear-p2 family, frozen small system") {
    /* A = 0, n = 1, zero line: x' = x, y' = y^2 - xy + 2x, curve (x-1)y + 2x - x^2 */
    FamilySpec f = FamilySpec::laguerre(Rational(0), 1);
    QuadraticSystem s = canonical(f);
    CHECK(s.p2() == UniPoly{Rational(0), Rational(1)});
    CHECK(s.q1() == UniPoly{Rational(0), Rational(-1)});
    CHECK(s.q2() == UniPoly{Rational(0), Rational(2)});

    UniPoly a0 = classical_generator(f);
    CHECK(a0 == UniPoly{Rational(-1), Rational(1)});  // monic normalization
    CurveBundle b = build_invariant_curve(a0, s, CofactorLine{});
    CHECK(b.a1 == UniPoly{Rational(0), Rational(2), Rational(-1)});
    CHECK(b.degree == 2);
}

TEST_CASE("symmetric-interval family matches the published table identically") {
    /* A = B = 0, n = 1: q22 = b^2+b-2, q21 = 2bg, q20 = 2-b+g^2 */
    Rational be(1, 2), ga(-2, 3);
    QuadraticSystem s = canonical(FamilySpec::jacobi(Rational(0), Rational(0), 1, be, ga));
    CHECK(s.q11 == Rational(2) * be);
    CHECK(s.q10 == Rational(2) * ga);
    CHECK(s.q22 == be * be + be - Rational(2));
    CHECK(s.q21 == Rational(2) * be * ga);
    CHECK(s.q20 == Rational(2) - be + ga * ga);

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int it = 0; it < 12; ++it) {
        Rational A(pick(rng), 2), B(pick(rng), 2), bb(pick(rng)), gg(pick(rng), 5);
        int n = 1 + it % 7;
        FamilySpec fam = FamilySpec::jacobi(A, B, n, bb, gg);
        CHECK(same_q_table(canonical(fam), literal_system(fam)));
    }
}

TEST_CASE("literal tables: two families agree everywhere, one does not") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int it = 0; it < 12; ++it) {
        Rational A(pick(rng)), bb(pick(rng)), gg(pick(rng), 2);
        int n = 1 + it % 7;
        FamilySpec lag = FamilySpec::laguerre(A, n, bb, gg);
        CHECK(same_q_table(canonical(lag), literal_system(lag)));

        Rational a(-n), b2(2 * pick(rng) + 1, 2), c(pick(rng) * 3 + 1, 3);
        FamilySpec hyp = FamilySpec::hypergeometric(a, b2, c, bb, gg);
        CHECK(same_q_table(canonical(hyp), literal_system(hyp)));
    }

    /* the constant-p2 literal table disagrees: at the zero line, n = 1 the
     * constant term doubles (4 instead of 2) */
    FamilySpec h = FamilySpec::hermite_like(1);
    QuadraticSystem lit = literal_system(h);
    CHECK(lit.q20 == Rational(4));
    CHECK(canonical(h).q20 == Rational(2));
    CHECK(lit.q11 == canonical(h).q11);
    CHECK(lit.q10 == canonical(h).q10);

    /* at beta = 2, gamma = 3, n = 1 all three q2 coefficients differ */
    FamilySpec h2 = FamilySpec::hermite_like(1, Rational(2), Rational(3));
    QuadraticSystem can2 = canonical(h2), lit2 = literal_system(h2);
    CHECK(can2.q22 == Rational(2));
    CHECK(lit2.q22 == Rational(0));
    CHECK(can2.q21 == Rational(9));
    CHECK(lit2.q21 == Rational(6));
    CHECK(can2.q20 == Rational(9));
    CHECK(lit2.q20 == Rational(11));
}

TEST_CASE("second-order reduction round-trips the operator") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> pick(-3, 3);
    auto roundtrip = [&](const FamilySpec& f) {
        SturmOperator op = family_operator(f);
        CofactorLine k{f.beta, f.gamma};
        QuadraticSystem s = derive_system(op, k);
        FuchsReduction fr = fuchs_reduction(s, k);
        CHECK(fr.t1 == op.r);
        CHECK(fr.m == op.p2 * op.kappa);
        REQUIRE(fr.recovered_kappa.has_value());
        CHECK(*fr.recovered_kappa == op.kappa);
        /* published variant: w' constant term doubles p21 (matches only when
         * p21 = 0) and the w coefficient has its sign flipped (never matches) */
        CHECK(fr.t1_matches_literal == op.p2.coeff(1).is_zero());
        CHECK_FALSE(fr.m_matches_literal);
        CHECK(fr.literal_m == -fr.m);
    };
    for (int it = 0; it < 8; ++it) {
        Rational bb(pick(rng)), gg(pick(rng), 2);
        int n = 1 + it;
        roundtrip(FamilySpec::hermite_like(n, bb, gg));
        roundtrip(FamilySpec::laguerre(Rational(2), n, bb, gg));
        roundtrip(FamilySpec::jacobi(Rational(1, 2), Rational(0), n, bb, gg));
        roundtrip(FamilySpec::hypergeometric(Rational(-n), Rational(5, 2), Rational(1, 3), bb, gg));
    }
}

TEST_CASE("special slice: the two x-linear q2 coefficients vanish") {
    CllSystem big = cll_special_system(Rational(-4), Rational(5, 2), Rational(1, 3));
    CHECK(big.k.beta == Rational(55, 2));
    CHECK(big.k.gamma == Rational(2, 3));
    CHECK(big.sys.q11 == Rational(115, 2));
    CHECK(big.sys.q10 == Rational(2, 3));
    CHECK(big.sys.q22 == Rational(845));
    CHECK(big.sys.q21 == Rational(0));
    CHECK(big.sys.q20 == Rational(0));
    CHECK(big.sys.p2() == UniPoly{Rational(0), Rational(1), Rational(-1)});

    CllSystem small = cll_special_system(Rational(-1), Rational(1), Rational(1, 2));
    CHECK(small.k.beta == Rational(1));
    CHECK(small.k.gamma == Rational(1, 2));
    CHECK(small.sys.q11 == Rational(3));
    CHECK(small.sys.q10 == Rational(1, 2));
    CHECK(small.sys.q22 == Rational(3));
    CHECK(small.sys.q21 == Rational(0));
    CHECK(small.sys.q20 == Rational(0));

    /* q21 = q20 = 0 on the slice for generic parameters too */
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pick(1, 6);
    for (int it = 0; it < 10; ++it) {
        Rational a(-pick(rng)), b(pick(rng), 2), c(2 * pick(rng) - 1, 7);
        CllSystem s = cll_special_system(a, b, c);
        CHECK(s.sys.q21 == Rational(0));
        CHECK(s.sys.q20 == Rational(0));
        CHECK(s.sys.q11 == a + b - Rational(1) - Rational(2) * a * b / c);
        CHECK(s.sys.q22 == a * b * (b - c) * (a - c) / (c * c));
    }

    CHECK_THROWS_AS(cll_special_system(Rational(-1), Rational(1), Rational(0)),
                    std::domain_error);
    CHECK_THROWS_AS(cll_special_system(Rational(0), Rational(1), Rational(1, 2)),
                    std::domain_error);
}

TEST_CASE("prescribed-curve fields satisfy their construction identity") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto rand_poly = [&](int dmax) {
        BiPoly p;
        for (int i = 0; i <= dmax; ++i)
            for (int j = 0; i + j <= dmax; ++j) p.add_term(i, j, Rational(coeff(rng)));
        return p;
    };
    for (int it = 0; it < 20; ++it) {
        PencilSpec spec;
        spec.g = rand_poly(3) + BiPoly::var_x();  // keep it nonconstant
        spec.nu = rand_poly(1);
        spec.l1 = rand_poly(1);
        spec.l2 = rand_poly(1);
        PencilSystem ps = pencil_system(spec);
        CHECK(lie_derivative(ps.P, ps.Q, spec.g) == ps.cofactor * spec.g);
    }
    CHECK_THROWS_AS(pencil_system(PencilSpec{}), std::invalid_argument);
}

TEST_CASE("family plumbing: names and degree retargeting") {
    CHECK(kind_from_name("hyp") == FamilySpec::Kind::Hypergeometric);
    CHECK(kind_from_name("hypergeometric") == FamilySpec::Kind::Hypergeometric);
    CHECK(kind_from_name("jacobi") == FamilySpec::Kind::Jacobi);
    CHECK(kind_from_name("laguerre") == FamilySpec::Kind::Laguerre);
    CHECK(kind_from_name("hermite") == FamilySpec::Kind::HermiteLike);
    CHECK_THROWS_AS(kind_from_name("nope"), std::invalid_argument);

    FamilySpec f = FamilySpec::hypergeometric(Rational(-2), Rational(5, 2), Rational(1, 3));
    CHECK(f.n == 2);
    FamilySpec g = with_degree(f, 7);
    CHECK(g.n == 7);
    CHECK(g.a == Rational(-7));
    FamilySpec h = with_degree(FamilySpec::laguerre(Rational(1), 3), 9);
    CHECK(h.n == 9);
    CHECK(h.kind_name() == "laguerre");
}
