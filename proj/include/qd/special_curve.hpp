#pragma once

#include <vector>

#include "qd/bipoly.hpp"
#include "qd/rational.hpp"
#include "qd/system.hpp"

namespace qd {

/* Curve built from Gauss hypergeometric values:
 *   value(x, y) = unit(x,y) + sum_k [ cf_k(x,y) * F(a_k,b_k;c_k;x)
 *                                   + cdf_k(x,y) * F'(a_k,b_k;c_k;x) ].
 * Covers the bundled curves whose a0 is a (possibly non-terminating)
 * series solution, and published curve displays mixing several series. */
struct SpecialPart {
    Rational a, b, c;
    BiPoly cf;   // multiplies F
    BiPoly cdf;  // multiplies F'
};

struct SpecialCurve {
    BiPoly unit;
    std::vector<SpecialPart> parts;

    double eval(double x, double y, double tol = 1e-13) const;
};

/* Exact invariance residual for systems with x' = x - x^2 (the series'
 * own singular polynomial), obtained by rewriting F'' through the
 * hypergeometric equation:  x(1-x) F'' = a b F - (c-(a+b+1)x) F'.
 * X(g) - K g collapses onto the module spanned by {1, F_k, F'_k}; the
 * residual is that coefficient list. All-zero certifies invariance. */
struct SpecialResidual {
    BiPoly unit;
    std::vector<std::pair<BiPoly, BiPoly>> parts;  // (coeff of F, coeff of F')

    bool is_zero() const {
        if (!unit.is_zero()) return false;
        for (const auto& [rf, rdf] : parts)
            if (!rf.is_zero() || !rdf.is_zero()) return false;
        return true;
    }
};

SpecialResidual special_invariance_residual(const SpecialCurve& g, const BiPoly& cofactor,
                                            const QuadraticSystem& sys);

}  // namespace qd
