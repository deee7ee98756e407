#pragma once

#include <string>

#include "qd/rational.hpp"
#include "qd/sturm.hpp"

namespace qd {

/* Parameterized generator families for polynomial kernel elements.
 *
 * Hypergeometric: x(1-x)w'' + (c-(a+b+1)x)w' - ab*w = 0, polynomial of
 *   degree n when a = -n (b likewise; a is the one used here).
 * Jacobi:        (1-x^2)w'' + (A-B-(A+B+2)x)w' + n(n+A+B+1)w = 0.
 * Laguerre:      x*w'' + (A+1-x)w' + n*w = 0.
 * HermiteLike:   w'' - x*w' + n*w = 0.
 *
 * beta/gamma are the cofactor line parameters carried along for system
 * construction (K = y + beta*x + gamma).
 */
struct FamilySpec {
    enum class Kind { Hypergeometric, Jacobi, Laguerre, HermiteLike };

    Kind kind = Kind::HermiteLike;
    Rational a, b, c;  // Hypergeometric
    Rational A, B;     // Jacobi (A, B); Laguerre uses A
    int n = 1;         // requested polynomial degree
    Rational beta, gamma;

    static FamilySpec hypergeometric(Rational a, Rational b, Rational c,
                                     Rational beta = Rational(0), Rational gamma = Rational(0));
    static FamilySpec jacobi(Rational A, Rational B, int n,
                             Rational beta = Rational(0), Rational gamma = Rational(0));
    static FamilySpec laguerre(Rational A, int n,
                               Rational beta = Rational(0), Rational gamma = Rational(0));
    static FamilySpec hermite_like(int n,
                                   Rational beta = Rational(0), Rational gamma = Rational(0));

    std::string kind_name() const;
};

/* Copy of f retargeted to degree n (Hypergeometric: also sets a = -n,
 * the terminating parameter). */
FamilySpec with_degree(FamilySpec f, int n);

/* Inverse of kind_name(); accepts the short alias "hyp". Throws on
 * unknown names. */
FamilySpec::Kind kind_from_name(const std::string& name);

/* The family's operator (p2, r, kappa). kappa for Hypergeometric is -ab;
 * the other families use their degree-n eigenvalue. */
SturmOperator family_operator(const FamilySpec& f);

/* Degree-n kernel element of the family operator.
 * Hypergeometric: the exact terminating series truncation (requires a to
 * be the non-positive integer -n); other families: polynomial_kernel
 * output (leading coefficient 1). */
UniPoly classical_generator(const FamilySpec& f);

}  // namespace qd
