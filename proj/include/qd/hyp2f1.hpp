#pragma once

#include "qd/rational.hpp"
#include "qd/unipoly.hpp"

namespace qd {

/* True when r is an integer <= 0. */
bool is_nonpositive_integer(const Rational& r);

/* Gauss hypergeometric series F(a,b;c;x) = sum_k (a)_k (b)_k / ((c)_k k!) x^k.
 *
 * Terminating cases (a or b a non-positive integer) are summed exactly over
 * the finite range. Otherwise partial sums run until the additive term stays
 * below tol*|partial sum| for 3 consecutive terms.
 *
 * Throws std::domain_error when |x| >= 1 (non-terminating case) or when c is
 * a non-positive integer reached by the series; std::runtime_error when 10^6
 * terms do not converge. */
double eval_2f1(const Rational& a, const Rational& b, const Rational& c,
                double x, double tol = 1e-13);

/* d/dx F(a,b;c;x) = (a*b/c) F(a+1,b+1;c+1;x). */
double eval_2f1_derivative(const Rational& a, const Rational& b, const Rational& c,
                           double x, double tol = 1e-13);

/* Exact terminating series as a polynomial: requires a (or b) to be a
 * non-positive integer; returns the finite sum with Rational coefficients. */
UniPoly series_2f1_poly(const Rational& a, const Rational& b, const Rational& c);

}  // namespace qd
