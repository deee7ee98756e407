#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qd/families.hpp"
#include "qd/numeric.hpp"
#include "qd/system.hpp"
#include "qd/verify.hpp"

namespace qd {

using Json = nlohmann::json;

/* JSON conventions: rationals are canonical "p/q" strings, univariate
 * polynomials are {"k": "p/q"} maps keyed by exponent, bivariate ones are
 * {"i,j": "p/q"} maps keyed by the exponent pair. Keys are emitted sorted,
 * so identical values serialize to identical bytes. */

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

Json system_to_json(const QuadraticSystem& s);
QuadraticSystem system_from_json(const Json& j);

Json family_to_json(const FamilySpec& f);
FamilySpec family_from_json(const Json& j);

Json bundle_to_json(const CurveBundle& b);
CurveBundle bundle_from_json(const Json& j);

Json certificate_to_json(const InvarianceCertificate& c);
InvarianceCertificate certificate_from_json(const Json& j);

Json special_to_json(const SpecialCurve& g);
SpecialCurve special_from_json(const Json& j);

Json curverep_to_json(const CurveRep& r);
CurveRep curverep_from_json(const Json& j);

Json darboux_to_json(const DarbouxSystemSet& s);
DarbouxSystemSet darboux_from_json(const Json& j);

Json audit_to_json(const std::vector<AuditReport>& reports);
std::vector<AuditReport> audit_from_json(const Json& j);

Json drift_to_json(const DriftReport& r);
DriftReport drift_from_json(const Json& j);

Json ambiguity_to_json(const AmbiguityReport& r);
AmbiguityReport ambiguity_from_json(const Json& j);

/* Top-level document: {"format_version": 1, "kind": ..., "payload": ...}.
 * kind is one of system | curve | certificate | darboux-set | audit |
 * drift | ambiguity. */
struct Document {
    int format_version = 1;
    std::string kind;
    Json payload;
};

Json document_json(const std::string& kind, const Json& payload);
std::string encode_document(const std::string& kind, const Json& payload);
Document decode_document(const std::string& text);

/* CSV emitters. Doubles are printed with enough digits to round-trip;
 * nonfinite values become empty cells. */
std::string trajectory_csv(const Trajectory& tr);
std::string trajectory_csv(const Trajectory& tr, const FirstIntegralSpec& F);
std::string levels_csv(const std::vector<LevelRow>& rows);
std::string drift_csv(const DriftReport& rep);

}  // namespace qd
