#include "qd/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qd/io.hpp"

namespace qd {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

struct FamilyFlags {
    std::string family;
    std::string a = "0", b = "0", c = "0", A = "0", B = "0";
    int n = 0;
    std::string beta = "0", gamma = "0";

    void attach(CLI::App* cmd, bool family_required = true) {
        auto* f = cmd->add_option("--family", family, "hyp|jacobi|laguerre|hermite");
        if (family_required) f->required();
        cmd->add_option("--a", a, "series parameter a (rational, e.g. -4)");
        cmd->add_option("--b", b, "series parameter b (rational, e.g. 5/2)");
        cmd->add_option("--c", c, "series parameter c (rational, non-integer)");
        cmd->add_option("--A", A, "weight parameter A (rational)");
        cmd->add_option("--B", B, "weight parameter B (rational)");
        cmd->add_option("--n", n, "kernel degree n >= 1");
        cmd->add_option("--beta", beta, "cofactor slope (rational)");
        cmd->add_option("--gamma", gamma, "cofactor offset (rational)");
    }

    FamilySpec build() const {
        const auto kind = kind_from_name(family);
        const Rational rb = Rational::parse(beta), rg = Rational::parse(gamma);
        FamilySpec f;
        switch (kind) {
            case FamilySpec::Kind::Hypergeometric:
                f = FamilySpec::hypergeometric(Rational::parse(a), Rational::parse(b),
                                               Rational::parse(c), rb, rg);
                if (n > 0) f = with_degree(f, n);
                break;
            case FamilySpec::Kind::Jacobi:
                f = FamilySpec::jacobi(Rational::parse(A), Rational::parse(B), n > 0 ? n : 1, rb,
                                       rg);
                break;
            case FamilySpec::Kind::Laguerre:
                f = FamilySpec::laguerre(Rational::parse(A), n > 0 ? n : 1, rb, rg);
                break;
            case FamilySpec::Kind::HermiteLike:
                f = FamilySpec::hermite_like(n > 0 ? n : 1, rb, rg);
                break;
        }
        return f;
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int cmd_construct(const FamilyFlags& ff, bool literal, const std::string& out,
                  const std::string& system_out, const std::string& curve_out,
                  const std::string& certificate_out) {
    FamilySpec f = ff.build();
    CofactorLine k{f.beta, f.gamma};
    QuadraticSystem canonical = derive_system(family_operator(f), k);
    QuadraticSystem chosen = literal ? literal_system(f) : canonical;
    UniPoly a0 = classical_generator(f);
    CurveBundle bundle = build_invariant_curve(a0, canonical, k);
    InvarianceCertificate cert = verify_invariance(chosen.P(), chosen.Q(), bundle.g, k.poly());

    if (!system_out.empty()) write_file(system_out, encode_document("system", system_to_json(chosen)));
    if (!curve_out.empty()) write_file(curve_out, encode_document("curve", bundle_to_json(bundle)));
    if (!certificate_out.empty())
        write_file(certificate_out, encode_document("certificate", certificate_to_json(cert)));
    if (!out.empty()) {
        Json combined{{"system", document_json("system", system_to_json(chosen))},
                      {"curve", document_json("curve", bundle_to_json(bundle))},
                      {"certificate", document_json("certificate", certificate_to_json(cert))}};
        write_file(out, combined.dump(2) + "\n");
    }
    std::cout << encode_document("certificate", certificate_to_json(cert));
    return cert.pass ? 0 : 1;
}

int cmd_verify(const std::string& system_path, const std::string& curve_path) {
    Document sd = decode_document(read_file(system_path));
    if (sd.kind != "system") throw std::invalid_argument("--system file is not a system document");
    Document cd = decode_document(read_file(curve_path));
    if (cd.kind != "curve") throw std::invalid_argument("--curve file is not a curve document");
    QuadraticSystem sys = system_from_json(sd.payload);
    BiPoly g = bundle_from_json(cd.payload).g;
    InvarianceCertificate cert = verify_invariance(sys.P(), sys.Q(), g);
    std::cout << encode_document("certificate", certificate_to_json(cert));
    return cert.pass ? 0 : 1;
}

int cmd_audit(const FamilyFlags& ff, int n_min, int n_max, const std::string& out) {
    FamilySpec base = ff.build();
    auto reports = audit_family(base, n_min, n_max);
    emit(encode_document("audit", audit_to_json(reports)), out);
    for (const auto& r : reports)
        if (!r.coefficient_diffs.empty() || !r.literal_invariance_pass) return 1;
    return 0;
}

int cmd_sweep(int n_max) {
    struct Slice {
        Rational beta, gamma;
    };
    const Slice slices[] = {{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(-1, 2), Rational(1, 3)}};
    const Rational half(1, 2);
    bool all_ok = true;
    for (const std::string fam : {"hyp", "jacobi", "laguerre", "hermite"}) {
        int cases = 0, ok = 0;
        for (int n = 1; n <= n_max; ++n) {
            for (const auto& s : slices) {
                FamilySpec f;
                if (fam == "hyp")
                    f = FamilySpec::hypergeometric(Rational(-n), Rational(5, 2), Rational(1, 3),
                                                   s.beta, s.gamma);
                else if (fam == "jacobi")
                    f = FamilySpec::jacobi(half, Rational(0), n, s.beta, s.gamma);
                else if (fam == "laguerre")
                    f = FamilySpec::laguerre(Rational(2), n, s.beta, s.gamma);
                else
                    f = FamilySpec::hermite_like(n, s.beta, s.gamma);
                CofactorLine k{s.beta, s.gamma};
                QuadraticSystem sys = derive_system(family_operator(f), k);
                CurveBundle bundle = build_invariant_curve(classical_generator(f), sys, k);
                InvarianceCertificate cert =
                    verify_invariance(sys.P(), sys.Q(), bundle.g, k.poly());
                ++cases;
                if (cert.pass && bundle.degree == n + 1) ++ok;
            }
        }
        std::cout << "family=" << fam << " cases=" << cases << " ok=" << ok << "\n";
        all_ok = all_ok && cases == ok;
    }
    std::cout << (all_ok ? "sweep: pass" : "sweep: FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_darboux(const std::string& a, const std::string& b, const std::string& c,
                const std::string& out) {
    DarbouxSystemSet set = cll_curve_set(Rational::parse(a), Rational::parse(b), Rational::parse(c));
    emit(encode_document("darboux-set", darboux_to_json(set)), out);
    return set.relation_found ? 0 : 1;
}

int cmd_drift(bool cll, const std::string& variant, const std::string& a, const std::string& b,
              const std::string& c, const std::string& beta, const std::string& gamma, double h,
              double T, double tol, double window, const std::string& out) {
    const Rational ra = Rational::parse(a), rb = Rational::parse(b), rc = Rational::parse(c);
    if (cll && !variant.empty())
        throw std::invalid_argument("--cll and --variant are mutually exclusive");
    if (variant == "both") {
        AmbiguityReport rep =
            ambiguity_report(ra, rb, rc, Rational::parse(beta), Rational::parse(gamma), h, T, tol);
        emit(encode_document("ambiguity", ambiguity_to_json(rep)), out);
        return rep.harness_validated ? 0 : 1;
    }

    QuadraticSystem sys;
    FirstIntegralSpec spec;
    if (cll) {
        DarbouxSystemSet set = cll_curve_set(ra, rb, rc);
        if (!set.relation_found)
            throw std::invalid_argument("no exponent relation found for the requested slice");
        sys = set.sys;
        spec = integral_from_set(set);
    } else if (variant == "v1" || variant == "v2") {
        const Rational rbe = Rational::parse(beta), rga = Rational::parse(gamma);
        FamilySpec f = FamilySpec::hypergeometric(ra, rb, rc, rbe, rga);
        sys = derive_system(family_operator(f), CofactorLine{rbe, rga});
        spec = transcribed_integral(ra, rb, rc, rbe, rga, variant);
    } else {
        throw std::invalid_argument("need --cll or --variant v1|v2|both");
    }
    DriftReport rep = drift_report(sys, spec, standard_seeds(), h, T, tol, window);
    std::cout << encode_document("drift", drift_to_json(rep));
    if (!out.empty()) write_file(out, drift_csv(rep));
    return rep.pass ? 0 : 1;
}

int cmd_trajectory(bool cll, const FamilyFlags& ff, const std::string& a, const std::string& b,
                   const std::string& c, double x0, double y0, double h, double T,
                   bool with_integral, const std::string& out) {
    QuadraticSystem sys;
    FirstIntegralSpec spec;
    bool have_spec = false;
    IntegrateOptions opt;
    if (cll) {
        const Rational ra = Rational::parse(a), rb = Rational::parse(b), rc = Rational::parse(c);
        if (with_integral) {
            DarbouxSystemSet set = cll_curve_set(ra, rb, rc);
            sys = set.sys;
            if (set.relation_found) {
                spec = integral_from_set(set);
                have_spec = true;
            }
        } else {
            sys = cll_special_system(ra, rb, rc).sys;
        }
        opt.unit_interval_guard = true;
    } else {
        FamilySpec f = ff.build();
        CofactorLine k{f.beta, f.gamma};
        sys = derive_system(family_operator(f), k);
    }
    Trajectory tr = integrate_trajectory(sys, x0, y0, h, T, opt);
    emit(have_spec ? trajectory_csv(tr, spec) : trajectory_csv(tr), out);
    return 0;
}

int cmd_levels(const FamilyFlags& ff, double xmin, double xmax, double ymin, double ymax, int nx,
               int ny, const std::string& out) {
    FamilySpec f = ff.build();
    CofactorLine k{f.beta, f.gamma};
    QuadraticSystem sys = derive_system(family_operator(f), k);
    CurveBundle bundle = build_invariant_curve(classical_generator(f), sys, k);
    BiPoly g = bundle.g;
    auto rows = level_samples([&g](double x, double y) { return g.eval(x, y); }, xmin, xmax,
                              ymin, ymax, nx, ny);
    emit(levels_csv(rows), out);
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact constructor/verifier for quadratic systems with invariant curves"};
    app.require_subcommand(1);
    std::function<int()> action;

    /* construct */
    auto* construct = app.add_subcommand(
        "construct", "derive a system, its invariant curve bundle, and the certificate");
    auto ff_construct = std::make_shared<FamilyFlags>();
    ff_construct->attach(construct);
    auto literal = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    auto system_out = std::make_shared<std::string>();
    auto curve_out = std::make_shared<std::string>();
    auto cert_out = std::make_shared<std::string>();
    construct->add_flag("--literal", *literal,
                        "use the transcribed literal coefficient tables instead of the derivation");
    construct->add_option("--out", *out, "write system+curve+certificate as one JSON file");
    construct->add_option("--system-out", *system_out, "write the system document");
    construct->add_option("--curve-out", *curve_out, "write the curve document");
    construct->add_option("--certificate-out", *cert_out, "write the certificate document");
    construct->callback([=, &action] {
        action = [=] {
            return cmd_construct(*ff_construct, *literal, *out, *system_out, *curve_out,
                                 *cert_out);
        };
    });

    /* verify */
    auto* verify = app.add_subcommand("verify", "re-check a stored system/curve pair");
    auto vsys = std::make_shared<std::string>();
    auto vcurve = std::make_shared<std::string>();
    verify->add_option("--system", *vsys, "system document")->required();
    verify->add_option("--curve", *vcurve, "curve document")->required();
    verify->callback([=, &action] { action = [=] { return cmd_verify(*vsys, *vcurve); }; });

    /* audit */
    auto* audit = app.add_subcommand(
        "audit", "compare the canonical derivation against the literal tables over a degree range");
    auto ff_audit = std::make_shared<FamilyFlags>();
    ff_audit->attach(audit);
    auto n_min = std::make_shared<int>(1);
    auto n_max = std::make_shared<int>(5);
    auto audit_out = std::make_shared<std::string>();
    audit->add_option("--n-min", *n_min, "first degree");
    audit->add_option("--n-max", *n_max, "last degree");
    audit->add_option("--out", *audit_out, "write the audit document here instead of stdout");
    audit->callback([=, &action] {
        action = [=] { return cmd_audit(*ff_audit, *n_min, *n_max, *audit_out); };
    });

    /* sweep */
    auto* sweep = app.add_subcommand("sweep", "full verification matrix over all four families");
    auto sweep_n = std::make_shared<int>(25);
    sweep->add_option("--n-max", *sweep_n, "largest kernel degree");
    sweep->callback([=, &action] { action = [=] { return cmd_sweep(*sweep_n); }; });

    /* darboux */
    auto* darboux = app.add_subcommand(
        "darboux", "invariant curve set, certified cofactors, and exponent relation");
    auto d_cll = std::make_shared<bool>(false);
    auto d_a = std::make_shared<std::string>("-4");
    auto d_b = std::make_shared<std::string>("5/2");
    auto d_c = std::make_shared<std::string>("1/3");
    auto d_out = std::make_shared<std::string>();
    darboux->add_flag("--cll", *d_cll, "use the special slice beta=a+b-ab/c-1, gamma=1-c")
        ->required();
    darboux->add_option("--a", *d_a, "negative integer a = -n");
    darboux->add_option("--b", *d_b, "rational b");
    darboux->add_option("--c", *d_c, "non-integer rational c");
    darboux->add_option("--out", *d_out, "write the darboux-set document here instead of stdout");
    darboux->callback([=, &action] {
        action = [=] { return cmd_darboux(*d_a, *d_b, *d_c, *d_out); };
    });

    /* drift */
    auto* drift = app.add_subcommand(
        "drift", "first-integral constancy along integrated trajectories");
    auto r_cll = std::make_shared<bool>(false);
    auto r_variant = std::make_shared<std::string>();
    auto r_a = std::make_shared<std::string>("-4");
    auto r_b = std::make_shared<std::string>("5/2");
    auto r_c = std::make_shared<std::string>("1/3");
    auto r_beta = std::make_shared<std::string>("0");
    auto r_gamma = std::make_shared<std::string>("0");
    auto r_h = std::make_shared<double>(1e-3);
    auto r_T = std::make_shared<double>(2.0);
    auto r_tol = std::make_shared<double>(1e-6);
    auto r_window = std::make_shared<double>(50.0);
    auto r_out = std::make_shared<std::string>();
    /* long-only help: frees the single-letter name for the --h step option */
    drift->set_help_flag("--help", "print help");
    drift->add_flag("--cll", *r_cll, "special-slice integral x^(c-1) g3/g4");
    drift->add_option("--variant", *r_variant,
                      "v1|v2|both: transcribed general integral reading(s)");
    drift->add_option("--a", *r_a, "rational a");
    drift->add_option("--b", *r_b, "rational b");
    drift->add_option("--c", *r_c, "non-integer rational c");
    drift->add_option("--beta", *r_beta, "cofactor slope (general readings)");
    drift->add_option("--gamma", *r_gamma, "cofactor offset (general readings)");
    drift->add_option("--h", *r_h, "step size");
    drift->add_option("--T", *r_T, "horizon");
    drift->add_option("--tol", *r_tol, "max relative drift for a pass");
    drift->add_option("--window", *r_window, "|y| evaluation window");
    drift->add_option("--out", *r_out, "CSV (per-seed) or JSON (--variant both) output file");
    drift->callback([=, &action] {
        action = [=] {
            return cmd_drift(*r_cll, *r_variant, *r_a, *r_b, *r_c, *r_beta, *r_gamma, *r_h, *r_T,
                             *r_tol, *r_window, *r_out);
        };
    });

    /* trajectory */
    auto* traj = app.add_subcommand("trajectory", "integrate one seed and emit t,x,y[,F] CSV");
    auto t_cll = std::make_shared<bool>(false);
    auto ff_traj = std::make_shared<FamilyFlags>();
    ff_traj->attach(traj, /*family_required=*/false);
    auto t_x0 = std::make_shared<double>(0.5);
    auto t_y0 = std::make_shared<double>(0.0);
    auto t_h = std::make_shared<double>(1e-3);
    auto t_T = std::make_shared<double>(2.0);
    auto t_F = std::make_shared<bool>(false);
    auto t_out = std::make_shared<std::string>();
    traj->set_help_flag("--help", "print help");
    traj->add_flag("--cll", *t_cll, "special-slice system for the given a, b, c");
    traj->add_option("--x0", *t_x0, "initial x");
    traj->add_option("--y0", *t_y0, "initial y");
    traj->add_option("--h", *t_h, "step size");
    traj->add_option("--T", *t_T, "horizon");
    traj->add_flag("--with-integral", *t_F, "append the |F| column (--cll only)");
    traj->add_option("--out", *t_out, "output CSV file (default stdout)");
    traj->callback([=, &action] {
        action = [=] {
            return cmd_trajectory(*t_cll, *ff_traj, ff_traj->a, ff_traj->b, ff_traj->c, *t_x0,
                                  *t_y0, *t_h, *t_T, *t_F, *t_out);
        };
    });

    /* levels */
    auto* levels = app.add_subcommand("levels", "curve values on a grid as x,y,f CSV");
    auto ff_lv = std::make_shared<FamilyFlags>();
    ff_lv->attach(levels);
    auto l_xmin = std::make_shared<double>(0.0);
    auto l_xmax = std::make_shared<double>(1.0);
    auto l_ymin = std::make_shared<double>(-1.0);
    auto l_ymax = std::make_shared<double>(1.0);
    auto l_nx = std::make_shared<int>(11);
    auto l_ny = std::make_shared<int>(11);
    auto l_out = std::make_shared<std::string>();
    levels->add_option("--xmin", *l_xmin, "grid x lower bound");
    levels->add_option("--xmax", *l_xmax, "grid x upper bound");
    levels->add_option("--ymin", *l_ymin, "grid y lower bound");
    levels->add_option("--ymax", *l_ymax, "grid y upper bound");
    levels->add_option("--nx", *l_nx, "grid points in x (>= 2)");
    levels->add_option("--ny", *l_ny, "grid points in y (>= 2)");
    levels->add_option("--out", *l_out, "output CSV file (default stdout)");
    levels->callback([=, &action] {
        action = [=] {
            return cmd_levels(*ff_lv, *l_xmin, *l_xmax, *l_ymin, *l_ymax, *l_nx, *l_ny, *l_out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? 0 : 0;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e) == 0 ? 0 : 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qd
