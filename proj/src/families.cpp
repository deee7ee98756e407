#include "qd/families.hpp"

#include <stdexcept>

#include "qd/hyp2f1.hpp"

namespace qd {

FamilySpec FamilySpec::hypergeometric(Rational a, Rational b, Rational c,
                                      Rational beta, Rational gamma) {
    FamilySpec f;
    f.kind = Kind::Hypergeometric;
    f.a = std::move(a);
    f.b = std::move(b);
    f.c = std::move(c);
    if (is_nonpositive_integer(f.a))
        f.n = static_cast<int>(-f.a.to_long());
    f.beta = std::move(beta);
    f.gamma = std::move(gamma);
    return f;
}

FamilySpec FamilySpec::jacobi(Rational A, Rational B, int n, Rational beta, Rational gamma) {
    FamilySpec f;
    f.kind = Kind::Jacobi;
    f.A = std::move(A);
    f.B = std::move(B);
    f.n = n;
    f.beta = std::move(beta);
    f.gamma = std::move(gamma);
    return f;
}

FamilySpec FamilySpec::laguerre(Rational A, int n, Rational beta, Rational gamma) {
    FamilySpec f;
    f.kind = Kind::Laguerre;
    f.A = std::move(A);
    f.n = n;
    f.beta = std::move(beta);
    f.gamma = std::move(gamma);
    return f;
}

FamilySpec FamilySpec::hermite_like(int n, Rational beta, Rational gamma) {
    FamilySpec f;
    f.kind = Kind::HermiteLike;
    f.n = n;
    f.beta = std::move(beta);
    f.gamma = std::move(gamma);
    return f;
}

std::string FamilySpec::kind_name() const {
    switch (kind) {
        case Kind::Hypergeometric: return "hypergeometric";
        case Kind::Jacobi: return "jacobi";
        case Kind::Laguerre: return "laguerre";
        case Kind::HermiteLike: return "hermite";
    }
    return "?";
}

FamilySpec with_degree(FamilySpec f, int n) {
    f.n = n;
    if (f.kind == FamilySpec::Kind::Hypergeometric) f.a = Rational(-n);
    return f;
}

FamilySpec::Kind kind_from_name(const std::string& name) {
    if (name == "hypergeometric" || name == "hyp") return FamilySpec::Kind::Hypergeometric;
    if (name == "jacobi") return FamilySpec::Kind::Jacobi;
    if (name == "laguerre") return FamilySpec::Kind::Laguerre;
    if (name == "hermite") return FamilySpec::Kind::HermiteLike;
    throw std::invalid_argument("unknown family '" + name + "'");
}

SturmOperator family_operator(const FamilySpec& f) {
    Rational one(1);
    switch (f.kind) {
        case FamilySpec::Kind::Hypergeometric:
            /* x(1-x)w'' + (c-(a+b+1)x)w' - ab w = 0 */
            return SturmOperator(UniPoly{Rational(0), Rational(1), Rational(-1)},
                                 UniPoly{f.c, -(f.a + f.b + one)},
                                 -(f.a * f.b));
        case FamilySpec::Kind::Jacobi:
            return SturmOperator(UniPoly{Rational(1), Rational(0), Rational(-1)},
                                 UniPoly{f.A - f.B, -(f.A + f.B + Rational(2))},
                                 Rational(f.n) * (Rational(f.n) + f.A + f.B + one));
        case FamilySpec::Kind::Laguerre:
            return SturmOperator(UniPoly{Rational(0), Rational(1)},
                                 UniPoly{f.A + one, Rational(-1)},
                                 Rational(f.n));
        case FamilySpec::Kind::HermiteLike:
            return SturmOperator(UniPoly{Rational(1)},
                                 UniPoly{Rational(0), Rational(-1)},
                                 Rational(f.n));
    }
    throw std::logic_error("family_operator: bad kind");
}

UniPoly classical_generator(const FamilySpec& f) {
    if (f.n < 1) throw std::invalid_argument("classical_generator: n >= 1 required");
    if (f.kind == FamilySpec::Kind::Hypergeometric) {
        if (!is_nonpositive_integer(f.a))
            throw std::domain_error("classical_generator: a must be a non-positive integer");
        if (is_nonpositive_integer(f.c))
            throw std::domain_error("classical_generator: c must not be a non-positive integer");
        return series_2f1_poly(f.a, f.b, f.c);
    }
    SturmOperator op = family_operator(f);
    for (const auto& e : polynomial_kernel(op, f.n))
        if (e.degree == f.n) return e.poly;
    throw std::domain_error("classical_generator: no degree-n kernel element");
}

}  // namespace qd
