#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qd {

/* Exact rational number.
 *
 * Thin value wrapper over GMP's mpq_class that keeps every value in
 * canonical form: gcd(num, den) = 1, den > 0, zero stored as 0/1.
 * The textual form is "p/q", or just "p" when q = 1; parse accepts both.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /* Parses "p", "p/q", with optional leading '-' on p (and only there
     * in canonical text). Throws on malformed input or q = 0. */
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: bad literal '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /* True when the value is an integer in [INT64_MIN, INT64_MAX]. */
    bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
    long to_long() const {
        if (!fits_long()) throw std::domain_error("Rational: not a small integer");
        return v_.get_num().get_si();
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /* Integer power; e may be negative for nonzero values. */
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        bool inv = e < 0;
        unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        mpq_class r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), k);
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), k);
        r.canonicalize();
        Rational out(r);
        if (inv) return Rational(1) / out;
        return out;
    }

private:
    mpq_class v_;
};

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }
inline Rational rat(const std::string& s) { return Rational::parse(s); }

}  // namespace qd
