#include "qd/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qd {

bool is_nonpositive_integer(const Rational& r) {
    return r.is_integer() && r.sign() <= 0;
}

namespace {

constexpr long kMaxTerms = 1000000;

/* Number of terms of the terminating series, when it terminates. */
long terminating_length(const Rational& a, const Rational& b) {
    long n = -1;
    if (is_nonpositive_integer(a)) n = -a.to_long();
    if (is_nonpositive_integer(b)) {
        long m = -b.to_long();
        if (n < 0 || m < n) n = m;
    }
    return n < 0 ? -1 : n + 1;  // k runs over 0..n
}

}  // namespace

UniPoly series_2f1_poly(const Rational& a, const Rational& b, const Rational& c) {
    long len = terminating_length(a, b);
    if (len < 0)
        throw std::domain_error("series_2f1_poly: series does not terminate");
    if (len > kMaxTerms)
        throw std::runtime_error("series_2f1_poly: term budget exceeded");
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(len));
    Rational t(1);
    for (long k = 0; k < len; ++k) {
        coeffs.push_back(t);
        Rational ck = c + Rational(k);
        if (ck.is_zero())
            throw std::domain_error("series_2f1_poly: c is a non-positive integer inside the sum");
        t = t * (a + Rational(k)) * (b + Rational(k)) / (ck * Rational(k + 1));
    }
    return UniPoly(std::move(coeffs));
}

double eval_2f1(const Rational& a, const Rational& b, const Rational& c,
                double x, double tol) {
    long len = terminating_length(a, b);
    if (len >= 0) {
        /* exact finite sum, evaluated by Horner */
        if (len > kMaxTerms) throw std::runtime_error("eval_2f1: term budget exceeded");
        return series_2f1_poly(a, b, c).eval(x);
    }
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("eval_2f1: series needs |x| < 1");
    if (is_nonpositive_integer(c))
        throw std::domain_error("eval_2f1: c must not be a non-positive integer");

    double sum = 1.0;
    double term = 1.0;
    double av = a.to_double(), bv = b.to_double(), cv = c.to_double();
    int quiet = 0;
    for (long k = 0; k < kMaxTerms; ++k) {
        double kk = static_cast<double>(k);
        term *= (av + kk) * (bv + kk) / ((cv + kk) * (kk + 1.0)) * x;
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("eval_2f1: no convergence within term budget");
}

double eval_2f1_derivative(const Rational& a, const Rational& b, const Rational& c,
                           double x, double tol) {
    Rational f = a * b / c;
    return f.to_double() * eval_2f1(a + Rational(1), b + Rational(1), c + Rational(1), x, tol);
}

}  // namespace qd
