#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qd/rational.hpp"
#include "qd/system.hpp"
#include "qd/verify.hpp"

namespace qd {

enum class TrajectoryEnd { Completed, Blowup, LeftDomain };

struct TrajectorySample {
    double t, x, y;
};

/* Fixed-step integration record. Retained samples satisfy the blowup and
 * domain guards; t is strictly increasing. */
struct Trajectory {
    std::vector<TrajectorySample> samples;
    TrajectoryEnd terminated = TrajectoryEnd::Completed;
};

struct IntegrateOptions {
    double blowup = 1e6;  // stop when |y| exceeds this, or the state goes nonfinite
    bool unit_interval_guard = false;  // stop when x leaves (delta, 1-delta)
    double delta = 1e-6;
};

/* Classical fixed-step fourth-order Runge-Kutta for (x' = P, y' = Q). */
Trajectory integrate_trajectory(const QuadraticSystem& sys, double x0, double y0, double h,
                                double T, const IntegrateOptions& opt = {});

/* Power-product first integral |F| = prod_i |f_i(x, y)|^{e_i}; factors are
 * either exact polynomials or series-backed curves (CurveRep covers both). */
struct IntegralFactor {
    CurveRep curve;
    Rational exponent;
};

struct FirstIntegralSpec {
    std::vector<IntegralFactor> factors;

    /* magnitude product; signs are tracked separately by the drift check */
    double eval_abs(double x, double y) const;
    /* true when any factor needs 0 < x < 1 (series part or fractional power) */
    bool needs_unit_interval() const;
};

/* Pair off curves and exponents of a solved Darboux set (zero exponents are
 * dropped). Throws when the set has no verified exponent vector. */
FirstIntegralSpec integral_from_set(const DarbouxSystemSet& set);

/* Drift of |F| along one integrated trajectory per seed, measured on the
 * initial sample prefix with |y| <= window (the evaluation window keeps the
 * y^2 escape from inflating the truncation error). Seeds are skipped, with
 * a recorded reason, when F(0) ~ 0, the seed lies on a factor's zero set
 * (exact zero, or below the cancellation noise floor of the evaluation), a
 * factor changes sign, the value goes nonfinite, or fewer than two samples
 * land in the window. */
struct SeedDrift {
    double x0 = 0, y0 = 0;
    std::string status;  // "ok" or a skip reason
    double drift = 0.0;  // max_t |F(t)-F(0)| / |F(0)| over the window
    size_t samples_used = 0;
};

struct DriftReport {
    double h = 0, T = 0, tol = 0, window = 0;
    std::vector<SeedDrift> seeds;
    size_t ok_count = 0;
    double max_drift = 0.0;  // over ok seeds
    bool pass = false;       // at least one ok seed and every ok drift <= tol
};

/* x0 in {0.2, 0.5, 0.8} x y0 in {-1, 0, 1, 2}, in that nesting order. */
std::vector<std::pair<double, double>> standard_seeds();

DriftReport drift_report(const QuadraticSystem& sys, const FirstIntegralSpec& spec,
                         const std::vector<std::pair<double, double>>& seeds, double h,
                         double T, double tol, double window = 50.0);

/* Integrator order probe: drift at step h vs h/2 on the same seed set
 * (seeds that are ok at both steps). A fourth-order scheme lands the ratio
 * near 16. */
struct OrderCheck {
    DriftReport at_h;
    DriftReport at_half;
    double ratio = 0.0;  // max common drift at h / max common drift at h/2
};

OrderCheck halving_check(const QuadraticSystem& sys, const FirstIntegralSpec& spec,
                         const std::vector<std::pair<double, double>>& seeds, double h,
                         double T, double tol, double window = 50.0);

/* Both readings of the ambiguously printed general first integral
 * x^(1-c) g1/g2, drift-tested side by side on the canonically derived
 * system, next to a from-scratch reference integral whose factor cofactors
 * are certified exactly (it validates the harness itself).
 *   v1 reads the garbled parameter lists as (1+a-c, 1+b-c, 2-c) and
 *      (2+a-c, 1+b-c, 2-c);
 *   v2 reads them as printed: (1+a+c, 1+b-c, 2-c) and (2+a+c, 1+b-c, 2-c). */
struct VariantResult {
    std::string name;  // "v1", "v2", "derived"
    DriftReport report;
};

struct AmbiguityReport {
    Rational a, b, c, beta, gamma;
    double h = 0, T = 0, tol = 0;
    std::vector<VariantResult> variants;
    std::string passing;  // "v1" | "v2" | "both" | "neither"
    bool harness_validated = false;  // the derived reference integral passed
};

/* The transcribed integral x^(1-c) g1/g2 under reading "v1" or "v2". */
FirstIntegralSpec transcribed_integral(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& beta, const Rational& gamma,
                                       const std::string& reading);

/* From-scratch reference integral for the same system: bundles over the two
 * local series solutions, factor cofactors certified exactly and exponents
 * solved exactly. Throws when certification fails (harness defect). */
FirstIntegralSpec derived_general_integral(const Rational& a, const Rational& b,
                                           const Rational& c, const Rational& beta,
                                           const Rational& gamma, const QuadraticSystem& sys);

AmbiguityReport ambiguity_report(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& beta, const Rational& gamma, double h,
                                 double T, double tol);

/* Row-major (x, y, f) grid samples; nonfinite values become empty cells. */
struct LevelRow {
    double x, y;
    std::optional<double> f;
};

std::vector<LevelRow> level_samples(const std::function<double(double, double)>& f, double x0,
                                    double x1, double y0, double y1, int nx, int ny);

}  // namespace qd
