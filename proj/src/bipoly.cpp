#include "qd/bipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qd {

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
    BiPoly p;
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (!c.is_zero()) p.t_[{i, j}] = c;
    return p;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) r.t_[{k, 0}] = p.coeff(k);
    return r;
}

BiPoly BiPoly::from_y(const UniPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) r.t_[{0, k}] = p.coeff(k);
    return r;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.i);
    return d;
}

int BiPoly::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.j);
    return d;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    auto [it, fresh] = t_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    check_size();
}

void BiPoly::check_size() const {
    if (t_.size() > kMaxTerms)
        throw std::length_error("BiPoly: term count exceeds cap");
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e.i, e.j, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e.i, e.j, -c);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_)
            r.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_[e] = c * s;
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (e.i > 0) r.t_[{e.i - 1, e.j}] = c * Rational(e.i);
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (e.j > 0) r.t_[{e.i, e.j - 1}] = c * Rational(e.j);
    return r;
}

namespace {

/* Horner over y inside x: exact for T in {Rational, double}. */
template <typename T, typename Conv>
T eval_impl(const BiPoly::Terms& terms, T x, T y, Conv conv) {
    /* gather dense rows per x exponent */
    std::map<int, std::map<int, T>> rows;
    for (const auto& [e, c] : terms) rows[e.i][e.j] = conv(c);
    T acc{};
    int prev_i = -1;
    bool first = true;
    /* iterate x exponents descending, Horner in x between them */
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        const auto& [i, row] = *it;
        T rowval{};
        int prev_j = -1;
        bool rfirst = true;
        for (auto jt = row.rbegin(); jt != row.rend(); ++jt) {
            const auto& [j, cv] = *jt;
            if (rfirst) {
                rowval = cv;
                rfirst = false;
            } else {
                for (int k = 0; k < prev_j - j; ++k) rowval = rowval * y;
                rowval = rowval + cv;
            }
            prev_j = j;
        }
        for (int k = 0; k < prev_j; ++k) rowval = rowval * y;
        if (first) {
            acc = rowval;
            first = false;
        } else {
            for (int k = 0; k < prev_i - i; ++k) acc = acc * x;
            acc = acc + rowval;
        }
        prev_i = i;
    }
    if (first) return T{};
    for (int k = 0; k < prev_i; ++k) acc = acc * x;
    return acc;
}

}  // namespace

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    return eval_impl<Rational>(t_, x, y, [](const Rational& c) { return c; });
}

double BiPoly::eval(double x, double y) const {
    return eval_impl<double>(t_, x, y, [](const Rational& c) { return c.to_double(); });
}

BiDivision bipoly_divmod(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw std::domain_error("bipoly_divmod: division by zero");
    BiDivision out;
    BiPoly work = f;
    const Exp2 lg = g.leading_exp();
    const Rational lc = g.leading_coeff();
    while (!work.is_zero()) {
        Exp2 lw = work.leading_exp();
        if (lw.i >= lg.i && lw.j >= lg.j) {
            Rational q = work.leading_coeff() / lc;
            BiPoly m = BiPoly::monomial(q, lw.i - lg.i, lw.j - lg.j);
            out.quotient = out.quotient + m;
            work = work - m * g;
        } else {
            /* move the leading term to the remainder */
            out.remainder.add_term(lw.i, lw.j, work.leading_coeff());
            work.add_term(lw.i, lw.j, -work.leading_coeff());
        }
    }
    return out;
}

std::optional<BiPoly> bipoly_exact_div(const BiPoly& f, const BiPoly& g) {
    BiDivision d = bipoly_divmod(f, g);
    if (!d.remainder.is_zero()) return std::nullopt;
    if (d.quotient * g != f) return std::nullopt;  // multiply-back guard
    return d.quotient;
}

BiPoly lie_derivative(const BiPoly& P, const BiPoly& Q, const BiPoly& f) {
    return P * f.dx() + Q * f.dy();
}

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool hasvar = e.i > 0 || e.j > 0;
        if (!hasvar || !a.is_one()) os << a.str();
        if (e.i > 0) {
            if (!a.is_one()) os << "*";
            os << "x";
            if (e.i > 1) os << "^" << e.i;
        }
        if (e.j > 0) {
            if (e.i > 0 || !a.is_one()) os << "*";
            os << "y";
            if (e.j > 1) os << "^" << e.j;
        }
    }
    return os.str();
}

}  // namespace qd
