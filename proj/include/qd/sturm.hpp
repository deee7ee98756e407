#pragma once

#include <vector>

#include "qd/rational.hpp"
#include "qd/unipoly.hpp"

namespace qd {

/* Second-order operator L[w] = p2*w'' + r*w' + kappa*w with
 * deg p2 <= 2, deg r <= 1, kappa != 0. */
struct SturmOperator {
    UniPoly p2;
    UniPoly r;
    Rational kappa;

    SturmOperator(UniPoly p2_, UniPoly r_, Rational kappa_);

    Rational p22() const { return p2.coeff(2); }
    Rational p21() const { return p2.coeff(1); }
    Rational p20() const { return p2.coeff(0); }
    Rational r1() const { return r.coeff(1); }
    Rational r0() const { return r.coeff(0); }

    UniPoly apply(const UniPoly& w) const;
};

/* The unique kappa for which a degree-n polynomial kernel element can
 * exist: the x^n coefficient of p2*w'' + r*w' + kappa*w must vanish,
 * giving kappa = -(n(n-1)*p22 + n*r1). n >= 1. */
Rational admissible_kappa(const UniPoly& p2, const UniPoly& r, int n);

struct KernelEntry {
    int degree = 0;       // exact degree of poly
    UniPoly poly;         // leading coefficient 1
    int dimension = 0;    // count of degree-`degree` kernel elements found
};

/* All polynomial kernel elements of the operator with degree <= nmax.
 *
 * For each degree n in 1..nmax with admissible_kappa(p2, r, n) == kappa,
 * the (n+1)x(n+1) exact linear system on the coefficients of w implied by
 * p2*w'' + r*w' + kappa*w = 0 is assembled and its kernel basis computed
 * by fraction-free elimination. Basis vectors of exact degree n are
 * returned, leading coefficient normalized to 1; every returned element
 * is re-verified by substitution into the operator. nmax <= 512. */
std::vector<KernelEntry> polynomial_kernel(const SturmOperator& op, int nmax);

}  // namespace qd
