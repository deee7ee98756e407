#include "qd/special_curve.hpp"

#include <stdexcept>

#include "qd/hyp2f1.hpp"

namespace qd {

double SpecialCurve::eval(double x, double y, double tol) const {
    double v = unit.eval(x, y);
    for (const auto& p : parts) {
        if (!p.cf.is_zero())
            v += p.cf.eval(x, y) * eval_2f1(p.a, p.b, p.c, x, tol);
        if (!p.cdf.is_zero())
            v += p.cdf.eval(x, y) * eval_2f1_derivative(p.a, p.b, p.c, x, tol);
    }
    return v;
}

SpecialResidual special_invariance_residual(const SpecialCurve& g, const BiPoly& cofactor,
                                            const QuadraticSystem& sys) {
    /* the F'' substitution divides by x(1-x); it must equal P exactly */
    UniPoly xmx2{Rational(0), Rational(1), Rational(-1)};
    if (sys.p2() != xmx2)
        throw std::domain_error("special_invariance_residual: needs x' = x - x^2");

    BiPoly P = sys.P();
    BiPoly Q = sys.Q();
    SpecialResidual out;
    out.unit = lie_derivative(P, Q, g.unit) - cofactor * g.unit;
    for (const auto& p : g.parts) {
        /* coefficient of F in X(g) - K g */
        BiPoly rf = P * p.cf.dx() + Q * p.cf.dy() + p.cdf * (p.a * p.b) - cofactor * p.cf;
        /* coefficient of F' */
        BiPoly rsub = BiPoly::constant(p.c) -
                      BiPoly::monomial(p.a + p.b + Rational(1), 1, 0);
        BiPoly rdf = P * p.cf + P * p.cdf.dx() + Q * p.cdf.dy() - rsub * p.cdf -
                     cofactor * p.cdf;
        out.parts.emplace_back(std::move(rf), std::move(rdf));
    }
    return out;
}

}  // namespace qd
