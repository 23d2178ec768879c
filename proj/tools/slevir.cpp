#include "slevir/fock/state_json.hpp"
#include "slevir/funcspace/random_element.hpp"
#include "slevir/geometry/geometry_json.hpp"
#include "slevir/sim/monte_carlo.hpp"
#include "slevir/sle/module.hpp"
#include "slevir/sle/module_json.hpp"
#include "slevir/suite/acceptance.hpp"
#include "slevir/virasoro/operators.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace slevir;

namespace {

// Flags shared by the subcommands that build an SLE variant.
struct VariantFlags {
    std::string kind = "kappa-rho";
    std::string rho = "kappa-6";
    int n = 2;
    std::string exponent = "2/kappa";
    std::string kappa = "generic";

    void add(CLI::App* app, bool numeric_kappa = false) {
        app->add_option("--variant", kind, "chordal | kappa-rho | multiple")
            ->check(CLI::IsMember({"chordal", "kappa-rho", "multiple"}))
            ->capture_default_str();
        app->add_option("--rho", rho, "comma-separated rho_K, expressions in kappa")->capture_default_str();
        app->add_option("--n", n, "number of curves (multiple)")->capture_default_str();
        app->add_option("--exponent", exponent, "Z = prod (x_J - x_I)^exponent (multiple)")->capture_default_str();
        app->add_option("--kappa", kappa, numeric_kappa ? "kappa value" : "\"generic\" or an exact fraction p/q")
            ->capture_default_str();
    }
};

std::optional<Rational> parse_kappa(const std::string& s) {
    if (s == "generic") return std::nullopt;
    ScalarK k = ScalarK::parse(s);
    auto c = k.constant_value();
    if (!c || *c <= 0) throw DomainError("kappa must be \"generic\" or a positive fraction, got " + s);
    return c;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split(s)) out.push_back(std::stod(item));
    return out;
}

ScalarK at_kappa(const std::string& expr, const std::optional<Rational>& k0) {
    ScalarK v = ScalarK::parse(expr);
    return k0 ? v.specialize_kappa(*k0) : v;
}

SleVariant make_variant(const VariantFlags& f, const ScalarK& kappa, const std::optional<Rational>& k0) {
    if (f.kind == "chordal") return make_chordal(kappa);
    if (f.kind == "multiple") return make_multiple(f.n, at_kappa(f.exponent, k0), kappa);
    std::vector<ScalarK> rho;
    for (const auto& r : split(f.rho)) rho.push_back(at_kappa(r, k0));
    return make_kappa_rho(rho, kappa);
}

SleVariant make_variant(const VariantFlags& f) {
    auto k0 = parse_kappa(f.kappa);
    return make_variant(f, k0 ? ScalarK(*k0) : ScalarK::kappa(), k0);
}

// A variant with symbolic coefficients, for simulation at a floating kappa.
SleVariant make_symbolic_variant(VariantFlags f) {
    f.kappa = "generic";
    return make_variant(f);
}

struct Output {
    std::string path;
    void add(CLI::App* app) { app->add_option("--out", path, "write the JSON/CSV artifact here instead of stdout"); }
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text << std::endl;
            return;
        }
        std::ofstream os(path);
        if (!os) throw Error("io", "cannot open " + path);
        os << text << '\n';
    }
};

int verdict(bool pass) { return pass ? 0 : 1; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virasoro structure and local martingales of SLE variants"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (default: SLEVIR_THREADS or all cores)");
    std::string current;
    std::function<int()> action;

    // check-commutators
    auto* cc = app.add_subcommand("check-commutators", "Virasoro relations of the function-space operators on random elements");
    int cc_elements = 20, cc_range = 3, cc_degree = 4;
    std::uint64_t cc_seed = 1;
    Output cc_out;
    cc->add_option("--elements", cc_elements)->capture_default_str();
    cc->add_option("--range", cc_range, "check -range <= n, m <= range")->capture_default_str();
    cc->add_option("--f-degree", cc_degree)->capture_default_str();
    cc->add_option("--seed", cc_seed)->capture_default_str();
    cc_out.add(cc);
    cc->callback([&] {
        action = [&] {
            std::mt19937_64 rng(cc_seed);
            RandomElementSpec spec;
            spec.points = {Var::x(1), Var::y(1)};
            spec.f_degree = cc_degree;
            Json out{{"schema", "slevir.commutators.v1"}, {"elements", cc_elements}, {"range", cc_range}};
            Json failures = Json::array();
            int checks = 0;
            for (int i = 0; i < cc_elements; ++i) {
                WeightAssignment w;
                w.delta[Var::x(1)] = random_scalar(rng);
                w.delta[Var::y(1)] = random_scalar(rng);
                w.c = random_scalar(rng);
                Element e = random_element(rng, spec);
                for (int n = -cc_range; n <= cc_range; ++n)
                    for (int m = -cc_range; m <= cc_range; ++m) {
                        ++checks;
                        if (!commutator_residual(n, m, w, e).is_zero()) failures.push_back({{"element", i}, {"n", n}, {"m", m}});
                    }
            }
            out["checks"] = checks;
            out["failures"] = failures;
            out["pass"] = failures.empty();
            cc_out.write(out.dump(2));
            return verdict(failures.empty());
        };
    });

    // build-module
    auto* bm = app.add_subcommand("build-module", "graded basis of U(vir) Z up to a level");
    VariantFlags bm_var;
    int bm_levels = 4;
    bool bm_skip_drift = false;
    Output bm_out;
    bm_var.add(bm);
    bm->add_option("--levels", bm_levels)->capture_default_str();
    bm->add_flag("--skip-drift-check", bm_skip_drift, "do not verify A-annihilation of the basis");
    bm_out.add(bm);
    bm->callback([&] {
        action = [&] {
            SleVariant v = make_variant(bm_var);
            ModuleBasis mb = build_module(v, bm_levels, !bm_skip_drift);
            Json out = module_to_json(v, mb);
            bm_out.write(out.dump(2));
            return verdict(bm_skip_drift || mb.annihilated);
        };
    });

    // find-singular
    auto* fs = app.add_subcommand("find-singular", "null and singular vectors at a special kappa");
    VariantFlags fs_var;
    int fs_level = 2;
    Output fs_out;
    fs_var.add(fs);
    fs->add_option("--level", fs_level)->capture_default_str();
    fs_out.add(fs);
    fs->callback([&] {
        action = [&] {
            auto k0 = parse_kappa(fs_var.kappa);
            auto rebuild = [&](const ScalarK& k) {
                auto c = k.constant_value();
                return make_variant(fs_var, k, c);
            };
            SingularNullReport r = find_singular_null(rebuild, fs_level, k0);
            fs_out.write(singular_report_to_json(r).dump(2));
            return 0;
        };
    });

    // verify-state
    auto* vs = app.add_subcommand("verify-state", "Coulomb-gas state components of SLE_kappa(rho) and their A-annihilation");
    std::string vs_rho = "kappa-6";
    int vs_level = 4, vs_degree = 6;
    Output vs_out;
    vs->add_option("--rho", vs_rho, "comma-separated rho_K (empty for chordal)")->capture_default_str();
    vs->add_option("--level", vs_level, "Fock level")->capture_default_str();
    vs->add_option("--degree", vs_degree, "f-degree of G_f")->capture_default_str();
    vs_out.add(vs);
    vs->callback([&] {
        action = [&] {
            std::vector<ScalarK> rho;
            for (const auto& r : split(vs_rho)) rho.push_back(ScalarK::parse(r));
            SleVariant v = make_kappa_rho(rho);
            auto comps = state_components(v, vs_level, vs_degree);
            std::vector<bool> ok;
            bool all = true;
            for (const auto& c : comps) {
                ok.push_back(apply_A(v, 1, v.Z * Element(c.value)).is_zero());
                all = all && ok.back();
            }
            Json out = state_to_json(v, comps, ok);
            out["pass"] = all;
            vs_out.write(out.dump(2));
            return verdict(all);
        };
    });

    // screening-check
    auto* sc = app.add_subcommand("screening-check", "screening total-derivative identities and the Coulomb null field");
    int sc_n = 2, sc_l = 1, sc_m = 3, sc_level = 3;
    Output sc_out;
    sc->add_option("--n", sc_n, "curves")->capture_default_str();
    sc->add_option("--l", sc_l, "screening charges")->capture_default_str();
    sc->add_option("--m", sc_m, "check Coulomb null fields for 0..m passive charges")->capture_default_str();
    sc->add_option("--state-level", sc_level, "level for the state total-derivative check (0 to skip)")->capture_default_str();
    sc_out.add(sc);
    sc->callback([&] {
        action = [&] {
            Json out{{"schema", "slevir.screening.v1"}, {"N", sc_n}, {"L", sc_l}};
            Json checks = Json::array();
            bool all = true;
            auto record = [&](const std::string& what, bool ok) {
                checks.push_back({{"check", what}, {"pass", ok}});
                all = all && ok;
            };
            for (int M = 0; M <= sc_m; ++M) {
                std::vector<ScalarK> a;
                for (int k = 0; k < M; ++k) a.push_back(ScalarK(Rational(k + 1, 2)) / ScalarK::t());
                record("coulomb null field M=" + std::to_string(M), coulomb_null_field_residual(a).is_zero());
            }
            for (int I = 1; I <= sc_n; ++I) record("screening I=" + std::to_string(I), screening_identity(sc_n, sc_l, I).is_zero());
            if (sc_level > 0)
                for (int I = 1; I <= sc_n; ++I)
                    record("state total derivative I=" + std::to_string(I),
                           multiple_state_total_derivative(sc_n, sc_l, I, sc_level, sc_level));
            out["checks"] = checks;
            out["pass"] = all;
            sc_out.write(out.dump(2));
            return verdict(all);
        };
    });

    // ff-integrate
    auto* ff = app.add_subcommand("ff-integrate", "Feigin-Fuchs integrals for every pairing configuration");
    int ff_n = 2, ff_l = 1, ff_nodes = 48;
    double ff_kappa = 6, ff_step = 1e-3;
    std::string ff_points, ff_format = "json";
    bool ff_res = false, ff_exp = false;
    Output ff_out;
    ff->add_option("--n", ff_n)->capture_default_str();
    ff->add_option("--l", ff_l)->capture_default_str();
    ff->add_option("--kappa", ff_kappa)->capture_default_str();
    ff->add_option("--points", ff_points, "comma-separated increasing points (default 0,1,...,N-1)");
    ff->add_option("--nodes", ff_nodes, "Gauss-Jacobi nodes per screening variable")->capture_default_str();
    ff->add_option("--fd-step", ff_step, "finite-difference step relative to spacing")->capture_default_str();
    ff->add_flag("--residuals", ff_res, "null-field residual per curve");
    ff->add_flag("--exponents", ff_exp, "collapse exponents of neighbouring points");
    ff->add_option("--format", ff_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    ff_out.add(ff);
    ff->callback([&] {
        action = [&] {
            std::vector<double> pts = ff_points.empty() ? std::vector<double>{} : parse_doubles(ff_points);
            if (pts.empty())
                for (int i = 0; i < ff_n; ++i) pts.push_back(i);
            QuadratureSpec spec;
            spec.nodes = ff_nodes;
            spec.fd_step = ff_step;
            spec.threads = threads;
            auto rows = geometry_sweep(ff_n, ff_l, pts, ff_kappa, spec, ff_res, ff_exp);
            ff_out.write(ff_format == "csv" ? geometry_to_csv(rows) : geometry_to_json(rows).dump(2));
            bool any = false;
            for (const auto& r : rows) any = any || r.Z.has_value();
            return verdict(any);
        };
    });

    // configs
    auto* cf = app.add_subcommand("configs", "enumerate pairing configurations with walk encodings");
    int cf_n = 4, cf_l = 2;
    Output cf_out;
    cf->add_option("--n", cf_n)->capture_default_str();
    cf->add_option("--l", cf_l)->capture_default_str();
    cf_out.add(cf);
    cf->callback([&] {
        action = [&] {
            Json out = configs_to_json(cf_n, cf_l);
            out["formula_count"] = config_count(cf_n, cf_l);
            cf_out.write(out.dump(2));
            return verdict(out["count"] == out["configs"].size());
        };
    });

    // Simulation flags shared by simulate and drift-test.
    struct SimFlags {
        VariantFlags var;
        std::string x0 = "0", y0 = "1";
        double dt = 1e-3, eps = 1e-2, horizon = 1;
        int paths = 1000, K = 8;
        std::uint64_t seed = 1;
        void add(CLI::App* app) {
            var.kappa = "2";
            var.add(app, true);
            app->add_option("--x0", x0, "initial curve points")->capture_default_str();
            app->add_option("--y0", y0, "initial passive points")->capture_default_str();
            app->add_option("--dt", dt)->capture_default_str();
            app->add_option("--eps", eps, "collision buffer")->capture_default_str();
            app->add_option("--horizon", horizon)->capture_default_str();
            app->add_option("--paths", paths)->capture_default_str();
            app->add_option("--coefficients", K, "evolve g_{-2}..g_{-K}")->capture_default_str();
            app->add_option("--seed", seed)->capture_default_str();
        }
        SimConfig config(unsigned threads) const {
            SimConfig c;
            c.variant = make_symbolic_variant(var);
            c.kappa = std::stod(var.kappa);
            c.x0 = parse_doubles(x0);
            c.y0 = c.variant.M ? parse_doubles(y0) : std::vector<double>{};
            c.dt = dt;
            c.eps = eps;
            c.horizon = horizon;
            c.n_paths = paths;
            c.K = K;
            c.seed = seed;
            c.threads = threads;
            return c;
        }
    };

    // simulate
    auto* sm = app.add_subcommand("simulate", "Euler-Maruyama paths of the driving processes and Loewner coefficients");
    SimFlags sm_flags;
    double sm_record = 0;
    bool sm_full = false;
    Output sm_out;
    sm_flags.add(sm);
    sm->add_option("--record-interval", sm_record, "time between recorded states (0: every step)")->capture_default_str();
    std::string sm_report = "paths", sm_cap_eps = "0.04,0.02,0.01", sm_stages = "1000:10,2000:100,4000:1000";
    std::optional<double> sm_expected;
    sm->add_flag("--full", sm_full, "include the recorded time series");
    sm->add_option("--report", sm_report, "paths | capacity | integrability")
        ->check(CLI::IsMember({"paths", "capacity", "integrability"}))
        ->capture_default_str();
    sm->add_option("--capacity-eps", sm_cap_eps, "buffers for the capacity report")->capture_default_str();
    sm->add_option("--expected", sm_expected, "reference value for the capacity report");
    sm->add_option("--stages", sm_stages, "paths:horizon stages for the integrability report")->capture_default_str();
    sm_out.add(sm);
    sm->callback([&] {
        action = [&] {
            SimConfig c = sm_flags.config(threads);
            validate(c);
            if (sm_report == "capacity") {
                auto r = capacity_expectation(c, parse_doubles(sm_cap_eps));
                Json out = capacity_report_to_json(r, c, sm_expected.value_or(1));
                if (!sm_expected) out["expected"] = out["relative_error"] = nullptr;
                sm_out.write(out.dump(2));
                return sm_expected ? verdict(out["relative_error"].get<double>() < 0.05) : 0;
            }
            if (sm_report == "integrability") {
                std::vector<std::pair<int, double>> stages;
                for (const auto& st : split(sm_stages)) {
                    auto parts = split(st, ':');
                    if (parts.size() != 2) throw DomainError("stage must be paths:horizon, got " + st);
                    stages.emplace_back(std::stoi(parts[0]), std::stod(parts[1]));
                }
                sm_out.write(integrability_report_to_json(integrability_check(c, stages), c.kappa).dump(2));
                return 0;
            }
            Json out{{"schema", "slevir.paths.v1"},
                     {"variant", to_string(c.variant.kind)},
                     {"kappa", c.kappa},
                     {"dt", c.dt},
                     {"eps", c.eps},
                     {"horizon", c.horizon},
                     {"seed", c.seed}};
            Json paths = Json::array();
            for (int i = 0; i < c.n_paths; ++i) {
                PathRecord r = simulate_path(c, i, sm_record);
                Json p{{"index", i},
                       {"stop", to_string(r.reason)},
                       {"stop_time", r.stop_time},
                       {"rejections", r.rejections},
                       {"x", r.x.back()},
                       {"y", r.y.back()},
                       {"g", r.g.back()}};
                if (sm_full) p["record"] = {{"t", r.times}, {"x", r.x}, {"y", r.y}, {"g", r.g}};
                paths.push_back(p);
            }
            out["paths"] = paths;
            sm_out.write(out.dump(2));
            return 0;
        };
    });

    // drift-test
    auto* dtc = app.add_subcommand("drift-test", "Monte-Carlo drift of candidate local martingales");
    SimFlags dt_flags;
    std::string dt_obs = "module", dt_slices = "0.05,0.1,0.15,0.2,0.3,0.4,0.5";
    int dt_level = 3;
    Output dt_out;
    dt_flags.paths = 10000;
    dt_flags.add(dtc);
    dtc->add_option("--observable", dt_obs, "module | capacity-martingale | positive-control")
        ->check(CLI::IsMember({"module", "capacity-martingale", "positive-control"}))
        ->capture_default_str();
    dtc->add_option("--level", dt_level, "module levels tested")->capture_default_str();
    dtc->add_option("--slices", dt_slices, "slice times")->capture_default_str();
    dt_out.add(dtc);
    dtc->callback([&] {
        action = [&] {
            SimConfig c = dt_flags.config(threads);
            auto slices = parse_doubles(dt_slices);
            Json reports = Json::array();
            bool all = true;
            auto run = [&](const Element& obs, ObservableForm form, const std::string& id, bool expect_pass) {
                auto r = martingale_drift_test(c, obs, form, slices, id);
                Json j = drift_report_to_json(r, to_string(c.variant.kind));
                j["expected_pass"] = expect_pass;
                reports.push_back(j);
                all = all && r.pass == expect_pass;
            };
            Element d2 = (Element::var(Var::y(1)) - Element::var(Var::x(1))) * (Element::var(Var::y(1)) - Element::var(Var::x(1)));
            Element g2 = Element::var(Var::f(-2));
            if (dt_obs == "module") {
                auto mb = build_module(c.variant, dt_level, false);
                for (const auto& lvl : mb.levels)
                    for (std::size_t i = 0; i < lvl.elements.size(); ++i)
                        run(lvl.elements[i], ObservableForm::DivideByZ,
                            "level " + std::to_string(lvl.level) + " element " + std::to_string(i), true);
            } else {
                if (c.variant.M != 1) throw DomainError("this observable needs one passive point");
                ScalarK k = ScalarK::kappa();
                if (dt_obs == "capacity-martingale")
                    run(d2 - g2.scaled((ScalarK(3) * k - ScalarK(8)) * ScalarK(Rational(1, 2))), ObservableForm::Direct,
                        "(y-x)^2 - (3 kappa - 8)/2 g_-2", true);
                else
                    run(d2 - g2, ObservableForm::Direct, "(y-x)^2 - g_-2", false);
            }
            Json out{{"schema", "slevir.drift-tests.v1"}, {"reports", reports}, {"pass", all}};
            dt_out.write(out.dump(2));
            return verdict(all);
        };
    });

    // paper-suite
    auto* ps = app.add_subcommand("paper-suite", "run every acceptance criterion");
    std::string ps_ids;
    std::uint64_t ps_seed = AcceptanceOptions{}.seed;
    Output ps_out;
    ps->add_option("--criteria", ps_ids, "comma-separated criterion ids (default all)");
    ps->add_option("--seed", ps_seed)->capture_default_str();
    ps_out.add(ps);
    ps->callback([&] {
        action = [&] {
            std::vector<int> ids;
            for (const auto& s : split(ps_ids)) ids.push_back(std::stoi(s));
            if (ids.empty())
                for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
            AcceptanceOptions opt;
            opt.seed = ps_seed;
            opt.threads = threads;
            std::vector<CriterionResult> rs;
            for (int id : ids) {
                rs.push_back(run_criterion(id, opt));
                std::cerr << format_line(rs.back()) << std::endl;
            }
            Json out = acceptance_to_json(rs);
            ps_out.write(out.dump(2));
            return verdict(out["pass"].get<bool>());
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    for (auto* sub : app.get_subcommands()) current = sub->get_name();
    try {
        if (threads > 0) setenv("SLEVIR_THREADS", std::to_string(threads).c_str(), 1);
        return action();
    } catch (const Error& e) {
        std::cout << Json{{"schema", "slevir.error.v1"}, {"subcommand", current}, {"code", e.code()}, {"message", e.what()}}.dump(2)
                  << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cout << Json{{"schema", "slevir.error.v1"}, {"subcommand", current}, {"code", "internal"}, {"message", e.what()}}.dump(2)
                  << std::endl;
        return 2;
    }
}
