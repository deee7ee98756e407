#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qd/bipoly.hpp"
#include "qd/families.hpp"
#include "qd/rational.hpp"
#include "qd/special_curve.hpp"
#include "qd/system.hpp"

namespace qd {

/* Exact invariance certificate for a curve g against a field (P, Q):
 * residual = X(g) - K*g. pass requires residual == 0 and a cofactor of
 * total degree <= 1 (the bound for quadratic fields, checked after the
 * fact rather than assumed). */
struct InvarianceCertificate {
    BiPoly P, Q;
    BiPoly curve;
    std::optional<BiPoly> cofactor;  // absent when X(g) is not divisible by g
    BiPoly residual;
    bool pass = false;
};

/* K = X(g)/g by exact division with multiply-back; absent when g does not
 * divide its own Lie derivative (g is not invariant). Constant g is
 * rejected: every K would satisfy the identity vacuously. */
std::optional<BiPoly> extract_cofactor(const BiPoly& P, const BiPoly& Q, const BiPoly& g);

/* Build the certificate using the expected cofactor when supplied, else the
 * extracted one (residual then falls back to the division remainder).
 * Verification failures come back as failing certificates, not exceptions. */
InvarianceCertificate verify_invariance(const BiPoly& P, const BiPoly& Q, const BiPoly& g,
                                        const std::optional<BiPoly>& expected_cofactor = {});

/* Cofactor of a series-backed curve by linear solving: ansatz
 * K = k0 + k1*x + k2*y, coefficients determined so that the reduction
 * residual vanishes identically; the result is re-certified through
 * special_invariance_residual before being returned. */
std::optional<BiPoly> special_extract_cofactor(const SpecialCurve& g,
                                               const QuadraticSystem& sys);

enum class DarbouxMode { FirstIntegral, IntegratingFactor };

/* Solve sum_i lambda_i*K_i = 0 (first-integral mode) or
 * sum_i lambda_i*K_i = -div(P,Q) (integrating-factor mode) exactly over the
 * monomial coefficients of the cofactors. First-integral mode returns the
 * first kernel basis vector, normalized so the last nonzero entry is -1
 * (else the leading nonzero entry is +1); absent when only the zero vector
 * works. The result is re-substituted before returning; an inexact solution
 * raises a logic error. */
std::optional<std::vector<Rational>> darboux_combination(const std::vector<BiPoly>& cofactors,
                                                         const BiPoly& P, const BiPoly& Q,
                                                         DarbouxMode mode);

/* One member of a Darboux curve set. Polynomial members carry an exact
 * BiPoly; series-backed members carry a SpecialCurve evaluator whose
 * cofactor was certified exactly through the reduction residual. */
struct CurveRep {
    std::string name;
    bool polynomial = true;
    BiPoly poly;          // meaningful when polynomial
    SpecialCurve special;  // meaningful when !polynomial
    BiPoly cofactor;

    double eval(double x, double y) const {
        return polynomial ? poly.eval(x, y) : special.eval(x, y);
    }
};

struct DarbouxSystemSet {
    QuadraticSystem sys;
    std::vector<CurveRep> curves;
    std::vector<Rational> exponents;  // empty when no relation was found
    DarbouxMode mode = DarbouxMode::FirstIntegral;
    bool relation_found = false;
};

/* The four invariant curves x, x-1 and the two series bundles of the special
 * slice (beta = a+b-ab/c-1, gamma = 1-c), with exactly certified cofactors
 * and the exponent vector solving sum lambda_i*K_i = 0. Requires a = -n
 * (n >= 1), so the first bundle closes to a polynomial, and non-integer c.
 * The second bundle closes to a polynomial only when 1+a-c or 1+b-c is a
 * non-positive integer; otherwise it is kept in series-backed form. */
DarbouxSystemSet cll_curve_set(const Rational& a, const Rational& b, const Rational& c);

/* Riccati form of the constant-p2 bundle: (y + (beta-1)x + gamma)*a0 + a0'. */
BiPoly riccati_curve(const UniPoly& a0, const CofactorLine& k);

struct CoefficientDiff {
    Rational canonical;
    Rational literal;
};

/* Per-degree comparison of the canonically derived system against the
 * literal coefficient tables, at the concrete (beta, gamma) of the family. */
struct AuditReport {
    FamilySpec family;
    QuadraticSystem canonical;
    QuadraticSystem literal;
    std::map<std::string, CoefficientDiff> coefficient_diffs;
    bool canonical_invariance_pass = false;
    bool literal_invariance_pass = false;
    BiPoly literal_residual;  // X_literal(g) - (y+beta*x+gamma)*g, canonical g
    std::string notes;
};

/* Audit one family over n in [n_min, n_max]: coefficient-by-coefficient
 * diffs plus an invariance check of the literal system against the
 * canonical curve. The canonical system failing its own invariance check
 * is an internal error, not a report entry. */
std::vector<AuditReport> audit_family(const FamilySpec& base, int n_min, int n_max);

}  // namespace qd
