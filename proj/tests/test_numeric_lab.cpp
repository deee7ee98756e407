#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qd/numeric.hpp"
#include "qd/verify.hpp"

using namespace qd;

namespace {

CurveRep poly_curve(std::string name, BiPoly g) {
    CurveRep r;
    r.name = std::move(name);
    r.polynomial = true;
    r.poly = std::move(g);
    return r;
}

QuadraticSystem pure_x_drift() {
    QuadraticSystem s;  // x' = 1, y' = y^2
    s.p20 = Rational(1);
    return s;
}

QuadraticSystem logistic_x() {
    QuadraticSystem s;  // x' = x - x^2, y' = y^2
    s.p21 = Rational(1);
    s.p22 = Rational(-1);
    return s;
}

}  // namespace

TEST_CASE("integrator: exact on a constant field, conserves a frozen line") {
    Trajectory tr = integrate_trajectory(pure_x_drift(), 0.0, 0.0, 1e-3, 2.0);
    REQUIRE(tr.terminated == TrajectoryEnd::Completed);
    REQUIRE(tr.samples.size() == 2001);
    CHECK(std::fabs(tr.samples.back().t - 2.0) <= 1e-12);
    CHECK(std::fabs(tr.samples.back().x - 2.0) <= 1e-12);
    CHECK(tr.samples.back().y == 0.0);  // y' = y^2 keeps the axis exactly
    /* t grid is uniform */
    CHECK(std::fabs(tr.samples[1].t - 1e-3) <= 1e-15);

    CHECK_THROWS_AS(integrate_trajectory(pure_x_drift(), 0, 0, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_trajectory(pure_x_drift(), 0, 0, 1e-3, -1.0),
                    std::invalid_argument);
}

TEST_CASE("integrator: finite-time escape trips the blow-up guard") {
    /* y' = y^2, y(0) = 1 escapes at t = 1 */
    Trajectory tr = integrate_trajectory(pure_x_drift(), 0.0, 1.0, 1e-3, 2.0);
    CHECK(tr.terminated == TrajectoryEnd::Blowup);
    REQUIRE(!tr.samples.empty());
    CHECK(tr.samples.back().t < 1.1);
    for (const auto& s : tr.samples) CHECK(std::fabs(s.y) <= 1e6);
}

TEST_CASE("integrator: fourth-order accuracy against the logistic closed form") {
    const double x0 = 0.2;
    Trajectory tr = integrate_trajectory(logistic_x(), x0, 0.0, 1e-3, 2.0);
    REQUIRE(tr.terminated == TrajectoryEnd::Completed);
    for (const auto& s : tr.samples) {
        const double et = std::exp(s.t);
        const double closed = x0 * et / (1.0 + x0 * (et - 1.0));
        CHECK(std::fabs(s.x - closed) <= 1e-10);
    }
}

TEST_CASE("integrator: unit-interval guard halts at the strip boundary") {
    QuadraticSystem s;  // x' = -1
    s.p20 = Rational(-1);
    IntegrateOptions opt;
    opt.unit_interval_guard = true;
    Trajectory tr = integrate_trajectory(s, 0.5, 0.0, 1e-3, 2.0, opt);
    CHECK(tr.terminated == TrajectoryEnd::LeftDomain);
    REQUIRE(!tr.samples.empty());
    CHECK(tr.samples.back().x > 0.0);
    CHECK(tr.samples.back().t < 0.51);

    /* seed already outside: no samples at all */
    Trajectory tr2 = integrate_trajectory(s, 1e-9, 0.0, 1e-3, 1.0, opt);
    CHECK(tr2.terminated == TrajectoryEnd::LeftDomain);
    CHECK(tr2.samples.empty());
}

TEST_CASE("magnitude products and their domain requirements") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    FirstIntegralSpec spec;
    spec.factors.push_back({poly_curve("x", x), Rational(2)});
    spec.factors.push_back({poly_curve("y", y), Rational(-1)});
    CHECK(spec.eval_abs(3.0, 2.0) == doctest::Approx(4.5).epsilon(1e-14));
    CHECK_FALSE(spec.needs_unit_interval());

    spec.factors[0].exponent = Rational(1, 2);
    CHECK(spec.needs_unit_interval());

    FirstIntegralSpec with_series;
    CurveRep sr;
    sr.name = "s";
    sr.polynomial = false;
    sr.special.parts.push_back(
        {Rational(1, 2), Rational(1, 3), Rational(5, 4), BiPoly::constant(Rational(1)), BiPoly()});
    with_series.factors.push_back({sr, Rational(1)});
    CHECK(with_series.needs_unit_interval());
}

TEST_CASE("drift: a constant product never moves, a non-integral curve does") {
    QuadraticSystem sys =
        derive_system(family_operator(FamilySpec::hermite_like(2)), CofactorLine{});

    FirstIntegralSpec one;
    one.factors.push_back({poly_curve("unit", BiPoly::constant(Rational(1))), Rational(1)});
    DriftReport flat = drift_report(sys, one, standard_seeds(), 1e-3, 1.0, 1e-6);
    CHECK(flat.pass);
    CHECK(flat.ok_count == 12);
    CHECK(flat.max_drift == 0.0);

    /* an invariant curve with nonzero cofactor is not a first integral */
    CurveBundle b = build_invariant_curve(
        classical_generator(FamilySpec::hermite_like(2)), sys, CofactorLine{});
    FirstIntegralSpec not_integral;
    not_integral.factors.push_back({poly_curve("g", b.g), Rational(1)});
    DriftReport moving = drift_report(sys, not_integral, standard_seeds(), 1e-3, 1.0, 1e-6);
    CHECK_FALSE(moving.pass);
}

TEST_CASE("seed statuses are reported, not silently dropped") {
    QuadraticSystem sys = logistic_x();
    FirstIntegralSpec spec;
    spec.factors.push_back({poly_curve("x", BiPoly::var_x()), Rational(1)});
    /* x0 = 0 sits on the factor's zero set */
    DriftReport rep = drift_report(sys, spec, {{0.0, 0.0}, {0.5, 0.0}}, 1e-3, 1.0, 1e-6);
    REQUIRE(rep.seeds.size() == 2);
    CHECK(rep.seeds[0].status == "factor-zero");
    /* the second seed evaluates fine but |x| genuinely moves */
    CHECK(rep.seeds[1].status == "ok");
    CHECK(rep.seeds[1].drift > 0.1);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("special-slice product is constant along trajectories") {
    DarbouxSystemSet set = cll_curve_set(Rational(-1), Rational(1), Rational(1, 2));
    REQUIRE(set.relation_found);
    FirstIntegralSpec spec = integral_from_set(set);
    CHECK(spec.factors.size() == 3);  // the zero exponent drops out
    CHECK(spec.needs_unit_interval());

    DriftReport rep = drift_report(set.sys, spec, standard_seeds(), 1e-3, 2.0, 1e-6);
    CHECK(rep.ok_count >= 10);
    CHECK(rep.pass);

    OrderCheck oc = halving_check(set.sys, spec, standard_seeds(), 1e-3, 2.0, 1e-6);
    CHECK(oc.at_h.pass);
    CHECK(oc.at_half.pass);
    CHECK(oc.ratio > 4.0);
    CHECK(oc.ratio < 64.0);

    DarbouxSystemSet broken = set;
    broken.relation_found = false;
    CHECK_THROWS_AS(integral_from_set(broken), std::invalid_argument);
}

TEST_CASE("reference integral for the general line validates the drift harness") {
    Rational a(-4), b(5, 2), c(1, 3), zero(0);
    FamilySpec f = FamilySpec::hypergeometric(a, b, c);
    QuadraticSystem sys = derive_system(family_operator(f), CofactorLine{});

    FirstIntegralSpec ref = derived_general_integral(a, b, c, zero, zero, sys);
    REQUIRE(ref.factors.size() == 3);
    CHECK(ref.factors[0].exponent == Rational(2, 3));  // 1 - c
    CHECK(ref.factors[1].exponent == Rational(1));
    CHECK(ref.factors[2].exponent == Rational(-1));

    DriftReport rep = drift_report(sys, ref, standard_seeds(), 1e-3, 2.0, 1e-5);
    CHECK(rep.ok_count > 0);
    CHECK(rep.pass);
}

TEST_CASE("the two readings of the garbled display are built as printed") {
    Rational a(-4), b(5, 2), c(1, 3), zero(0);
    FirstIntegralSpec v1 = transcribed_integral(a, b, c, zero, zero, "v1");
    FirstIntegralSpec v2 = transcribed_integral(a, b, c, zero, zero, "v2");
    CHECK_THROWS_AS(transcribed_integral(a, b, c, zero, zero, "v3"), std::invalid_argument);

    REQUIRE(v1.factors.size() == 3);
    CHECK(v1.factors[0].exponent == Rational(2, 3));  // x^(1-c)
    CHECK(v1.factors[1].exponent == Rational(1));
    CHECK(v1.factors[2].exponent == Rational(-1));

    /* the readings differ exactly in the sign carried by c in the first
     * parameter of the garbled series */
    const auto& p1 = v1.factors[1].curve.special.parts[0];
    const auto& p2 = v2.factors[1].curve.special.parts[0];
    CHECK(p1.a == Rational(1) + a - c);
    CHECK(p2.a == Rational(1) + a + c);
    CHECK(p1.b == p2.b);
    CHECK(p1.c == p2.c);
    const auto& q1 = v1.factors[2].curve.special.parts[1];
    const auto& q2 = v2.factors[2].curve.special.parts[1];
    CHECK(q1.a == Rational(2) + a - c);
    CHECK(q2.a == Rational(2) + a + c);
}

TEST_CASE("seed grid and level grid layout") {
    auto seeds = standard_seeds();
    REQUIRE(seeds.size() == 12);
    CHECK(seeds.front() == std::pair<double, double>(0.2, -1.0));
    CHECK(seeds.back() == std::pair<double, double>(0.8, 2.0));

    auto rows = level_samples([](double x, double y) { return x + 10.0 * y; }, 0.0, 1.0, 0.0,
                              1.0, 3, 2);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].x == 0.0);
    CHECK(rows[1].x == 0.5);
    CHECK(rows[2].x == 1.0);
    CHECK(rows[0].y == 0.0);
    CHECK(rows[3].y == 1.0);  // second row of the grid
    REQUIRE(rows[4].f.has_value());
    CHECK(*rows[4].f == doctest::Approx(10.5));

    auto bad = level_samples([](double x, double) { return 1.0 / x; }, 0.0, 1.0, 0.0, 1.0, 2, 2);
    CHECK_FALSE(bad[0].f.has_value());
    CHECK(bad[1].f.has_value());
    CHECK_THROWS_AS(level_samples([](double, double) { return 0.0; }, 0, 1, 0, 1, 1, 2),
                    std::invalid_argument);
}
