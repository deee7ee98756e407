#include "qd/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qd {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("decode: " + what); }

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) bad(std::string("missing int '") + key + "'");
    return j.at(key).get<int>();
}

double num_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) bad(std::string("missing number '") + key + "'");
    return j.at(key).get<double>();
}

bool bool_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_boolean()) bad(std::string("missing bool '") + key + "'");
    return j.at(key).get<bool>();
}

std::string str_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) bad(std::string("missing string '") + key + "'");
    return j.at(key).get<std::string>();
}

Rational rat_field(const Json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing rational '") + key + "'");
    return rational_from_json(j.at(key));
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) bad("rational must be a \"p/q\" string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        bad(std::string("rational '") + j.get<std::string>() + "': " + e.what());
    }
}

Json unipoly_to_json(const UniPoly& p) {
    Json j = Json::object();
    const auto& cs = p.coeffs();
    for (size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) j[std::to_string(k)] = cs[k].str();
    return j;
}

UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_object()) bad("univariate polynomial must be an object");
    std::vector<Rational> cs;
    for (const auto& [key, val] : j.items()) {
        size_t pos = 0;
        int k = -1;
        try {
            k = std::stoi(key, &pos);
        } catch (const std::exception&) {
        }
        if (k < 0 || pos != key.size()) bad("exponent key '" + key + "'");
        if (static_cast<size_t>(k) >= cs.size()) cs.resize(static_cast<size_t>(k) + 1);
        cs[static_cast<size_t>(k)] = rational_from_json(val);
    }
    return UniPoly(std::move(cs));
}

Json bipoly_to_json(const BiPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e.i) + "," + std::to_string(e.j)] = c.str();
    return j;
}

BiPoly bipoly_from_json(const Json& j) {
    if (!j.is_object()) bad("bivariate polynomial must be an object");
    BiPoly p;
    for (const auto& [key, val] : j.items()) {
        const size_t comma = key.find(',');
        if (comma == std::string::npos) bad("exponent key '" + key + "' (want \"i,j\")");
        int i = -1, jj = -1;
        size_t p1 = 0, p2 = 0;
        try {
            i = std::stoi(key.substr(0, comma), &p1);
            jj = std::stoi(key.substr(comma + 1), &p2);
        } catch (const std::exception&) {
        }
        if (i < 0 || jj < 0 || p1 != comma || p2 != key.size() - comma - 1)
            bad("exponent key '" + key + "' (want \"i,j\")");
        p.add_term(i, jj, rational_from_json(val));
    }
    return p;
}

Json system_to_json(const QuadraticSystem& s) {
    return Json{{"p22", s.p22.str()}, {"p21", s.p21.str()}, {"p20", s.p20.str()},
                {"q11", s.q11.str()}, {"q10", s.q10.str()}, {"q22", s.q22.str()},
                {"q21", s.q21.str()}, {"q20", s.q20.str()}};
}

QuadraticSystem system_from_json(const Json& j) {
    if (!j.is_object()) bad("system must be an object");
    QuadraticSystem s;
    s.p22 = rat_field(j, "p22");
    s.p21 = rat_field(j, "p21");
    s.p20 = rat_field(j, "p20");
    s.q11 = rat_field(j, "q11");
    s.q10 = rat_field(j, "q10");
    s.q22 = rat_field(j, "q22");
    s.q21 = rat_field(j, "q21");
    s.q20 = rat_field(j, "q20");
    return s;
}

Json family_to_json(const FamilySpec& f) {
    return Json{{"kind", f.kind_name()}, {"a", f.a.str()},       {"b", f.b.str()},
                {"c", f.c.str()},        {"A", f.A.str()},       {"B", f.B.str()},
                {"n", f.n},              {"beta", f.beta.str()}, {"gamma", f.gamma.str()}};
}

FamilySpec family_from_json(const Json& j) {
    FamilySpec f;
    f.kind = kind_from_name(str_field(j, "kind"));
    f.a = rat_field(j, "a");
    f.b = rat_field(j, "b");
    f.c = rat_field(j, "c");
    f.A = rat_field(j, "A");
    f.B = rat_field(j, "B");
    f.n = int_field(j, "n");
    f.beta = rat_field(j, "beta");
    f.gamma = rat_field(j, "gamma");
    return f;
}

Json bundle_to_json(const CurveBundle& b) {
    return Json{{"a0", unipoly_to_json(b.a0)},
                {"a1", unipoly_to_json(b.a1)},
                {"g", bipoly_to_json(b.g)},
                {"degree", b.degree}};
}

CurveBundle bundle_from_json(const Json& j) {
    CurveBundle b;
    b.a0 = unipoly_from_json(j.at("a0"));
    b.a1 = unipoly_from_json(j.at("a1"));
    b.g = bipoly_from_json(j.at("g"));
    b.degree = int_field(j, "degree");
    return b;
}

Json certificate_to_json(const InvarianceCertificate& c) {
    Json j{{"P", bipoly_to_json(c.P)},
           {"Q", bipoly_to_json(c.Q)},
           {"curve", bipoly_to_json(c.curve)},
           {"residual", bipoly_to_json(c.residual)},
           {"pass", c.pass}};
    j["cofactor"] = c.cofactor ? bipoly_to_json(*c.cofactor) : Json();
    return j;
}

InvarianceCertificate certificate_from_json(const Json& j) {
    InvarianceCertificate c;
    c.P = bipoly_from_json(j.at("P"));
    c.Q = bipoly_from_json(j.at("Q"));
    c.curve = bipoly_from_json(j.at("curve"));
    c.residual = bipoly_from_json(j.at("residual"));
    c.pass = bool_field(j, "pass");
    if (j.contains("cofactor") && !j.at("cofactor").is_null())
        c.cofactor = bipoly_from_json(j.at("cofactor"));
    return c;
}

Json special_to_json(const SpecialCurve& g) {
    Json parts = Json::array();
    for (const auto& p : g.parts)
        parts.push_back(Json{{"a", p.a.str()},
                             {"b", p.b.str()},
                             {"c", p.c.str()},
                             {"cf", bipoly_to_json(p.cf)},
                             {"cdf", bipoly_to_json(p.cdf)}});
    return Json{{"unit", bipoly_to_json(g.unit)}, {"parts", parts}};
}

SpecialCurve special_from_json(const Json& j) {
    SpecialCurve g;
    g.unit = bipoly_from_json(j.at("unit"));
    for (const auto& pj : j.at("parts")) {
        SpecialPart p;
        p.a = rat_field(pj, "a");
        p.b = rat_field(pj, "b");
        p.c = rat_field(pj, "c");
        p.cf = bipoly_from_json(pj.at("cf"));
        p.cdf = bipoly_from_json(pj.at("cdf"));
        g.parts.push_back(std::move(p));
    }
    return g;
}

Json curverep_to_json(const CurveRep& r) {
    Json j{{"name", r.name},
           {"polynomial", r.polynomial},
           {"cofactor", bipoly_to_json(r.cofactor)}};
    if (r.polynomial)
        j["poly"] = bipoly_to_json(r.poly);
    else
        j["special"] = special_to_json(r.special);
    return j;
}

CurveRep curverep_from_json(const Json& j) {
    CurveRep r;
    r.name = str_field(j, "name");
    r.polynomial = bool_field(j, "polynomial");
    r.cofactor = bipoly_from_json(j.at("cofactor"));
    if (r.polynomial)
        r.poly = bipoly_from_json(j.at("poly"));
    else
        r.special = special_from_json(j.at("special"));
    return r;
}

Json darboux_to_json(const DarbouxSystemSet& s) {
    Json curves = Json::array();
    for (const auto& c : s.curves) curves.push_back(curverep_to_json(c));
    Json expo = Json::array();
    for (const auto& e : s.exponents) expo.push_back(e.str());
    return Json{{"system", system_to_json(s.sys)},
                {"curves", curves},
                {"exponents", expo},
                {"mode", s.mode == DarbouxMode::FirstIntegral ? "first-integral"
                                                              : "integrating-factor"},
                {"relation_found", s.relation_found}};
}

DarbouxSystemSet darboux_from_json(const Json& j) {
    DarbouxSystemSet s;
    s.sys = system_from_json(j.at("system"));
    for (const auto& cj : j.at("curves")) s.curves.push_back(curverep_from_json(cj));
    for (const auto& ej : j.at("exponents")) s.exponents.push_back(rational_from_json(ej));
    const std::string mode = str_field(j, "mode");
    if (mode == "first-integral")
        s.mode = DarbouxMode::FirstIntegral;
    else if (mode == "integrating-factor")
        s.mode = DarbouxMode::IntegratingFactor;
    else
        bad("mode '" + mode + "'");
    s.relation_found = bool_field(j, "relation_found");
    return s;
}

Json audit_to_json(const std::vector<AuditReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) {
        Json diffs = Json::object();
        for (const auto& [name, d] : r.coefficient_diffs)
            diffs[name] = Json{{"canonical", d.canonical.str()}, {"literal", d.literal.str()}};
        arr.push_back(Json{{"family", family_to_json(r.family)},
                           {"canonical", system_to_json(r.canonical)},
                           {"literal", system_to_json(r.literal)},
                           {"diffs", diffs},
                           {"canonical_invariance", r.canonical_invariance_pass},
                           {"literal_invariance", r.literal_invariance_pass},
                           {"literal_residual", bipoly_to_json(r.literal_residual)},
                           {"notes", r.notes}});
    }
    return Json{{"reports", arr}};
}

std::vector<AuditReport> audit_from_json(const Json& j) {
    std::vector<AuditReport> out;
    for (const auto& rj : j.at("reports")) {
        AuditReport r;
        r.family = family_from_json(rj.at("family"));
        r.canonical = system_from_json(rj.at("canonical"));
        r.literal = system_from_json(rj.at("literal"));
        for (const auto& [name, d] : rj.at("diffs").items())
            r.coefficient_diffs.emplace(
                name, CoefficientDiff{rat_field(d, "canonical"), rat_field(d, "literal")});
        r.canonical_invariance_pass = bool_field(rj, "canonical_invariance");
        r.literal_invariance_pass = bool_field(rj, "literal_invariance");
        r.literal_residual = bipoly_from_json(rj.at("literal_residual"));
        r.notes = str_field(rj, "notes");
        out.push_back(std::move(r));
    }
    return out;
}

Json drift_to_json(const DriftReport& r) {
    Json seeds = Json::array();
    for (const auto& s : r.seeds)
        seeds.push_back(Json{{"x0", s.x0},
                             {"y0", s.y0},
                             {"status", s.status},
                             {"drift", s.drift},
                             {"samples", s.samples_used}});
    return Json{{"h", r.h},
                {"T", r.T},
                {"tol", r.tol},
                {"window", r.window},
                {"seeds", seeds},
                {"ok_count", r.ok_count},
                {"max_drift", r.max_drift},
                {"pass", r.pass}};
}

DriftReport drift_from_json(const Json& j) {
    DriftReport r;
    r.h = num_field(j, "h");
    r.T = num_field(j, "T");
    r.tol = num_field(j, "tol");
    r.window = num_field(j, "window");
    for (const auto& sj : j.at("seeds")) {
        SeedDrift s;
        s.x0 = num_field(sj, "x0");
        s.y0 = num_field(sj, "y0");
        s.status = str_field(sj, "status");
        s.drift = num_field(sj, "drift");
        s.samples_used = sj.at("samples").get<size_t>();
        r.seeds.push_back(std::move(s));
    }
    r.ok_count = j.at("ok_count").get<size_t>();
    r.max_drift = num_field(j, "max_drift");
    r.pass = bool_field(j, "pass");
    return r;
}

Json ambiguity_to_json(const AmbiguityReport& r) {
    Json variants = Json::array();
    for (const auto& v : r.variants)
        variants.push_back(Json{{"name", v.name}, {"report", drift_to_json(v.report)}});
    return Json{{"a", r.a.str()},
                {"b", r.b.str()},
                {"c", r.c.str()},
                {"beta", r.beta.str()},
                {"gamma", r.gamma.str()},
                {"h", r.h},
                {"T", r.T},
                {"tol", r.tol},
                {"variants", variants},
                {"passing", r.passing},
                {"harness_validated", r.harness_validated}};
}

AmbiguityReport ambiguity_from_json(const Json& j) {
    AmbiguityReport r;
    r.a = rat_field(j, "a");
    r.b = rat_field(j, "b");
    r.c = rat_field(j, "c");
    r.beta = rat_field(j, "beta");
    r.gamma = rat_field(j, "gamma");
    r.h = num_field(j, "h");
    r.T = num_field(j, "T");
    r.tol = num_field(j, "tol");
    for (const auto& vj : j.at("variants"))
        r.variants.push_back({str_field(vj, "name"), drift_from_json(vj.at("report"))});
    r.passing = str_field(j, "passing");
    r.harness_validated = bool_field(j, "harness_validated");
    return r;
}

Json document_json(const std::string& kind, const Json& payload) {
    return Json{{"format_version", 1}, {"kind", kind}, {"payload", payload}};
}

std::string encode_document(const std::string& kind, const Json& payload) {
    return document_json(kind, payload).dump(2) + "\n";
}

Document decode_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    Document d;
    d.format_version = int_field(j, "format_version");
    if (d.format_version != 1) bad("unsupported format_version");
    d.kind = str_field(j, "kind");
    if (!j.contains("payload")) bad("missing payload");
    d.payload = j.at("payload");
    return d;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::string out = "t,x,y\n";
    for (const auto& s : tr.samples)
        out += fmt_double(s.t) + "," + fmt_double(s.x) + "," + fmt_double(s.y) + "\n";
    return out;
}

std::string trajectory_csv(const Trajectory& tr, const FirstIntegralSpec& F) {
    std::string out = "t,x,y,F\n";
    for (const auto& s : tr.samples) {
        out += fmt_double(s.t) + "," + fmt_double(s.x) + "," + fmt_double(s.y) + ",";
        try {
            const double v = F.eval_abs(s.x, s.y);
            if (std::isfinite(v)) out += fmt_double(v);
        } catch (const std::exception&) {
        }
        out += "\n";
    }
    return out;
}

std::string levels_csv(const std::vector<LevelRow>& rows) {
    std::string out = "x,y,f\n";
    for (const auto& r : rows) {
        out += fmt_double(r.x) + "," + fmt_double(r.y) + ",";
        if (r.f) out += fmt_double(*r.f);
        out += "\n";
    }
    return out;
}

std::string drift_csv(const DriftReport& rep) {
    std::string out = "x0,y0,status,samples,drift\n";
    for (const auto& s : rep.seeds) {
        out += fmt_double(s.x0) + "," + fmt_double(s.y0) + "," + s.status + "," +
               std::to_string(s.samples_used) + ",";
        if (s.status == "ok") out += fmt_double(s.drift);
        out += "\n";
    }
    return out;
}

}  // namespace qd
