#pragma once

#include <optional>

#include "qd/bipoly.hpp"
#include "qd/families.hpp"
#include "qd/rational.hpp"
#include "qd/sturm.hpp"
#include "qd/unipoly.hpp"

namespace qd {

/* Planar quadratic system of the shape
 *   x' = p2(x) = p22 x^2 + p21 x + p20
 *   y' = y^2 + q1(x) y + q2(x),  q1 = q11 x + q10,  q2 = q22 x^2 + q21 x + q20.
 * The y^2 coefficient is fixed to 1. */
struct QuadraticSystem {
    Rational p22, p21, p20;
    Rational q11, q10;
    Rational q22, q21, q20;

    UniPoly p2() const { return UniPoly{p20, p21, p22}; }
    UniPoly q1() const { return UniPoly{q10, q11}; }
    UniPoly q2() const { return UniPoly{q20, q21, q22}; }

    BiPoly P() const { return BiPoly::from_x(p2()); }
    BiPoly Q() const {
        return BiPoly::monomial(Rational(1), 0, 2) +
               BiPoly::from_x(q1()) * BiPoly::var_y() + BiPoly::from_x(q2());
    }

    friend bool operator==(const QuadraticSystem& a, const QuadraticSystem& b) = default;
};

/* Cofactor line K = y + beta*x + gamma. */
struct CofactorLine {
    Rational beta, gamma;
    BiPoly poly() const {
        return BiPoly::var_y() + BiPoly::monomial(beta, 1, 0) + BiPoly::constant(gamma);
    }
    friend bool operator==(const CofactorLine& a, const CofactorLine& b) = default;
};

/* Invariant curve of the bundled shape g = a0(x)*y + a1(x). */
struct CurveBundle {
    UniPoly a0, a1;
    BiPoly g;
    int degree = 0;  // total degree of g
};

/* System whose y-linear matching row forces a1 = p2*a0' + s*a0 and whose
 * y-free row reduces to p2*(p2 w'' + r w' + kappa w) on a0:
 *   q11 = r1 - 2 p22 + 2 beta
 *   q10 = r0 - p21 + 2 gamma
 *   q2  = (kappa + beta - q11) p2 + (beta x + gamma)((q11-beta)x + (q10-gamma)) */
QuadraticSystem derive_system(const SturmOperator& op, const CofactorLine& k);

/* The curve g = a0*y + a1 with a1 = p2*a0' + ((q11-beta)x + (q10-gamma))*a0.
 * For a degree-n a0 the total degree of g is n+1. */
CurveBundle build_invariant_curve(const UniPoly& a0, const QuadraticSystem& sys,
                                  const CofactorLine& k);

/* Second-order reduction of the curve condition: eliminating a1 from
 * Xg = K g leaves p2^2 w'' + p2 T1 w' + M w = 0 with
 *   T1 = p2' + s - (beta x + gamma),  M = (q11-beta) p2 + q2 - (beta x + gamma) s,
 * s = (q11-beta)x + (q10-gamma). recovered_kappa is M/p2 when that quotient
 * is an exact constant. The literal_* fields hold a published variant of the
 * same reduction that disagrees with the derivation (its w' constant term
 * doubles p21, and the sign of its whole w coefficient is flipped); the
 * comparison flags record where the derived values differ from it. */
struct FuchsReduction {
    UniPoly t1;
    UniPoly m;
    std::optional<Rational> recovered_kappa;
    UniPoly literal_t1;
    UniPoly literal_m;
    bool t1_matches_literal = false;
    bool m_matches_literal = false;
};

FuchsReduction fuchs_reduction(const QuadraticSystem& sys, const CofactorLine& k);

/* Verbatim transcription of the published per-family system tables,
 * divergences from derive_system included (see audit_family). */
QuadraticSystem literal_system(const FamilySpec& f);

/* Vector field carrying a prescribed invariant curve g:
 *   P = -nu * dg/dy + l1 * g,  Q = nu * dg/dx + l2 * g
 * with cofactor l1 * dg/dx + l2 * dg/dy. */
struct PencilSpec {
    BiPoly g, nu, l1, l2;
};

struct PencilSystem {
    BiPoly P, Q;
    BiPoly cofactor;  // l1*g_x + l2*g_y
};

PencilSystem pencil_system(const PencilSpec& spec);

/* The hypergeometric-family system at the parameter slice
 * beta = a+b-ab/c-1, gamma = 1-c, where q21 and q20 vanish:
 *   x' = x(1-x),  y' = y^2 + (1-c)y + (a+b-1-2ab/c)xy + (ab(b-c)(a-c)/c^2)x^2. */
struct CllSystem {
    QuadraticSystem sys;
    CofactorLine k;  // the slice's (beta, gamma)
    Rational a, b, c;
};

CllSystem cll_special_system(const Rational& a, const Rational& b, const Rational& c);

}  // namespace qd
