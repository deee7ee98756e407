#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qd/rational.hpp"
#include "qd/unipoly.hpp"

namespace qd {

/* Exponent pair (i, j) for x^i * y^j. */
struct Exp2 {
    int i = 0;
    int j = 0;
    int grade() const { return i + j; }
    friend bool operator==(const Exp2& a, const Exp2& b) = default;
};

/* Graded lexicographic order with x > y: compare total degree first,
 * then the x exponent. Strict weak order used as the term order for
 * division and leading-term queries. */
struct GrlexLess {
    bool operator()(const Exp2& a, const Exp2& b) const {
        if (a.grade() != b.grade()) return a.grade() < b.grade();
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/* Sparse bivariate polynomial in (x, y) over Rational.
 * Terms are kept in a map ordered by grlex ascending; zero coefficients
 * are never stored. Term count is capped at 10^6.
 */
class BiPoly {
public:
    static constexpr size_t kMaxTerms = 1000000;

    using Terms = std::map<Exp2, Rational, GrlexLess>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rational& c);
    static BiPoly monomial(const Rational& c, int i, int j);
    static BiPoly var_x() { return monomial(Rational(1), 1, 0); }
    static BiPoly var_y() { return monomial(Rational(1), 0, 1); }
    /* lift a univariate polynomial in x (or in y) */
    static BiPoly from_x(const UniPoly& p);
    static BiPoly from_y(const UniPoly& p);

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    int total_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.grade(); }
    int degree_x() const;
    int degree_y() const;
    Rational coeff(int i, int j) const;

    /* leading term under grlex */
    Exp2 leading_exp() const { return t_.rbegin()->first; }
    Rational leading_coeff() const { return t_.rbegin()->second; }

    void add_term(int i, int j, const Rational& c);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator*(const Rational& s) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly dx() const;
    BiPoly dy() const;

    Rational eval(const Rational& x, const Rational& y) const;
    double eval(double x, double y) const;

    std::string str() const;

private:
    void check_size() const;
    Terms t_;
};

inline BiPoly operator*(const Rational& s, const BiPoly& p) { return p * s; }

/* Division with remainder by a single divisor under grlex (x > y):
 * f = q*g + r where no term of r is divisible by the leading term of g.
 * Unique for the fixed order. */
struct BiDivision {
    BiPoly quotient;
    BiPoly remainder;
};
BiDivision bipoly_divmod(const BiPoly& f, const BiPoly& g);

/* Exact division: quotient when g | f (verified by multiply-back),
 * nullopt otherwise. Division by zero throws. */
std::optional<BiPoly> bipoly_exact_div(const BiPoly& f, const BiPoly& g);

/* Derivative along the vector field (P, Q): P*df/dx + Q*df/dy. */
BiPoly lie_derivative(const BiPoly& P, const BiPoly& Q, const BiPoly& f);

}  // namespace qd
