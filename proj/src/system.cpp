#include "qd/system.hpp"

#include <stdexcept>

namespace qd {

QuadraticSystem derive_system(const SturmOperator& op, const CofactorLine& k) {
    QuadraticSystem s;
    s.p22 = op.p22();
    s.p21 = op.p21();
    s.p20 = op.p20();
    Rational two(2);
    s.q11 = op.r1() - two * s.p22 + two * k.beta;
    s.q10 = op.r0() - s.p21 + two * k.gamma;

    UniPoly sline{s.q10 - k.gamma, s.q11 - k.beta};
    UniPoly kline{k.gamma, k.beta};
    UniPoly q2 = op.p2 * (op.kappa + k.beta - s.q11) + kline * sline;
    if (q2.degree() > 2) throw std::logic_error("derive_system: deg q2 > 2");
    s.q22 = q2.coeff(2);
    s.q21 = q2.coeff(1);
    s.q20 = q2.coeff(0);
    return s;
}

CurveBundle build_invariant_curve(const UniPoly& a0, const QuadraticSystem& sys,
                                  const CofactorLine& k) {
    if (a0.is_zero()) throw std::invalid_argument("build_invariant_curve: a0 = 0");
    CurveBundle c;
    c.a0 = a0;
    UniPoly sline{sys.q10 - k.gamma, sys.q11 - k.beta};
    c.a1 = sys.p2() * a0.derivative() + sline * a0;
    c.g = BiPoly::from_x(c.a0) * BiPoly::var_y() + BiPoly::from_x(c.a1);
    c.degree = c.g.total_degree();
    return c;
}

FuchsReduction fuchs_reduction(const QuadraticSystem& sys, const CofactorLine& k) {
    FuchsReduction f;
    UniPoly sline{sys.q10 - k.gamma, sys.q11 - k.beta};
    UniPoly kline{k.gamma, k.beta};
    UniPoly p2 = sys.p2();

    f.t1 = p2.derivative() + sline - kline;
    f.m = p2 * (sys.q11 - k.beta) + sys.q2() - kline * sline;

    if (auto q = f.m.divide_exact(p2); q && q->degree() <= 0)
        f.recovered_kappa = q->coeff(0);
    if (f.m.is_zero()) f.recovered_kappa = Rational(0);

    /* published form: w' numerator (2p22+q11-2b)x + 2p21+q10-2g and the
     * w coefficient carried with the opposite overall sign */
    f.literal_t1 = UniPoly{Rational(2) * sys.p21 + sys.q10 - Rational(2) * k.gamma,
                           Rational(2) * sys.p22 + sys.q11 - Rational(2) * k.beta};
    Rational b = k.beta, g = k.gamma;
    UniPoly n{g * g - g * sys.q10 + sys.q20,
              sys.q21 + Rational(2) * g * b - sys.q10 * b - g * sys.q11,
              b * b + sys.q22 - b * sys.q11};
    f.literal_m = -(p2 * (sys.q11 - b) + n);
    f.t1_matches_literal = (f.t1 == f.literal_t1);
    f.m_matches_literal = (f.m == f.literal_m);
    return f;
}

QuadraticSystem literal_system(const FamilySpec& f) {
    QuadraticSystem s;
    Rational one(1), two(2);
    Rational b = f.beta, g = f.gamma;
    Rational n(static_cast<long>(f.n));
    switch (f.kind) {
        case FamilySpec::Kind::Hypergeometric: {
            s.p22 = Rational(-1); s.p21 = one; s.p20 = Rational(0);
            s.q11 = two * b - f.a - f.b + one;
            s.q10 = f.c - one + two * g;
            s.q22 = b * b + (two - f.a - f.b) * b + (f.a - one) * (f.b - one);
            s.q21 = f.c * b - f.a * f.b + (one - g) * (-two * b - one + f.a + f.b);
            s.q20 = g * (g + f.c - one);
            break;
        }
        case FamilySpec::Kind::Jacobi: {
            s.p22 = Rational(-1); s.p21 = Rational(0); s.p20 = one;
            s.q11 = two * b - f.A - f.B;
            s.q10 = two * g + f.A - f.B;
            s.q22 = b * b + b - n * (n + one) - (one + n + b) * (f.A + f.B);
            s.q21 = (b - g) * f.A - (g + b) * f.B + two * g * b;
            s.q20 = (n + one - g) * f.B + (n + one + g) * f.A + n * (n + one) + g * g - b;
            break;
        }
        case FamilySpec::Kind::Laguerre: {
            s.p22 = Rational(0); s.p21 = one; s.p20 = Rational(0);
            s.q11 = two * b - one;
            s.q10 = two * g + f.A;
            s.q22 = (b - one) * b;
            s.q21 = b * (f.A + two * g - one) + n + one - g;
            s.q20 = f.A * g + g * g;
            break;
        }
        case FamilySpec::Kind::HermiteLike: {
            s.p22 = Rational(0); s.p21 = Rational(0); s.p20 = one;
            s.q11 = two * b - one;
            s.q10 = two * g;
            s.q22 = b * b - two * b;
            s.q21 = two * g * (b - one);
            s.q20 = g * g - b + two * (n + one);
            break;
        }
    }
    return s;
}

PencilSystem pencil_system(const PencilSpec& spec) {
    if (spec.g.is_zero()) throw std::invalid_argument("pencil_system: g = 0");
    PencilSystem out;
    BiPoly gx = spec.g.dx();
    BiPoly gy = spec.g.dy();
    out.P = -(spec.nu * gy) + spec.l1 * spec.g;
    out.Q = spec.nu * gx + spec.l2 * spec.g;
    out.cofactor = spec.l1 * gx + spec.l2 * gy;
    return out;
}

CllSystem cll_special_system(const Rational& a, const Rational& b, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("cll_special_system: c = 0");
    if ((a * b).is_zero()) throw std::domain_error("cll_special_system: ab = 0 degenerates kappa");
    CllSystem out;
    out.a = a;
    out.b = b;
    out.c = c;
    out.k.beta = a + b - a * b / c - Rational(1);
    out.k.gamma = Rational(1) - c;
    FamilySpec f = FamilySpec::hypergeometric(a, b, c, out.k.beta, out.k.gamma);
    out.sys = derive_system(family_operator(f), out.k);
    return out;
}

}  // namespace qd
