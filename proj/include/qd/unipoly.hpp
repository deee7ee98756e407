#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qd/rational.hpp"

namespace qd {

/* Dense univariate polynomial over Rational, low-degree-first storage.
 * Invariant: the trailing (highest-index) coefficient is nonzero, so the
 * zero polynomial is the empty vector and degree() of zero is -1.
 */
class UniPoly {
public:
    UniPoly() = default;
    /* coefficients low to high: {c0, c1, ...} */
    UniPoly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit UniPoly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    /* c * x^k */
    static UniPoly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /* coefficient of x^k; zero outside the stored range */
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }
    Rational leading() const {
        return c_.empty() ? Rational(0) : c_.back();
    }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;

    /* substitute x -> u*x + v, exact */
    UniPoly compose_affine(const Rational& u, const Rational& v) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    /* exact division; nullopt when b does not divide *this or b = 0 */
    std::optional<UniPoly> divide_exact(const UniPoly& b) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }

}  // namespace qd
