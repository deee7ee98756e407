#include "qd/unipoly.hpp"

#include <sstream>

namespace qd {

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
    UniPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::compose_affine(const Rational& u, const Rational& v) const {
    /* Horner: p(u*x+v) built highest coefficient first. */
    UniPoly lin;
    lin.c_ = {v, u};
    lin.trim();
    UniPoly acc;
    for (int k = degree(); k >= 0; --k)
        acc = acc * lin + UniPoly::constant(coeff(k));
    return acc;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<size_t>(k)];
    return acc;
}

double UniPoly::eval(double x) const {
    double acc = 0.0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<size_t>(k)].to_double();
    return acc;
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& b) const {
    if (b.is_zero()) return std::nullopt;
    UniPoly rem = *this;
    UniPoly quot;
    if (rem.is_zero()) return quot;
    if (rem.degree() < b.degree()) return std::nullopt;
    quot.c_.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Rational f = rem.leading() / b.leading();
        int k = rem.degree() - b.degree();
        quot.c_[static_cast<size_t>(k)] = f;
        rem = rem - UniPoly::monomial(f, k) * b;
    }
    if (!rem.is_zero()) return std::nullopt;
    quot.trim();
    return quot;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0 || !a.is_one()) os << a.str();
        if (k > 0) {
            if (!a.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace qd
