#include "slevir/suite/acceptance.hpp"

#include "slevir/fock/state.hpp"
#include "slevir/funcspace/random_element.hpp"
#include "slevir/geometry/feigin_fuchs.hpp"
#include "slevir/geometry/pairing.hpp"
#include "slevir/sim/monte_carlo.hpp"
#include "slevir/sle/linear_algebra.hpp"
#include "slevir/sle/module.hpp"
#include "slevir/virasoro/operators.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace slevir {

namespace {

const Var X = Var::x(1), Y = Var::y(1);
const ScalarK K = ScalarK::kappa();

Element v(Var a) { return Element::var(a); }
Element f(int m) { return Element::var(Var::f(m)); }

SleVariant rho_variant(const ScalarK& k) { return make_kappa_rho({k - ScalarK(6)}, k); }

// Accumulates named sub-checks; the criterion passes when all of them do.
struct Checks {
    int total = 0;
    std::vector<std::string> failed;
    void operator()(bool ok, const std::string& what) {
        ++total;
        if (!ok) failed.push_back(what);
    }
    bool pass() const { return failed.empty(); }
    std::string summary(const std::string& extra = "") const {
        std::ostringstream os;
        os << (total - static_cast<int>(failed.size())) << "/" << total << " checks";
        if (!extra.empty()) os << "; " << extra;
        for (std::size_t i = 0; i < failed.size() && i < 5; ++i) os << (i ? ", " : "; failed: ") << failed[i];
        if (failed.size() > 5) os << ", ...";
        return os.str();
    }
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

long partitions(int n) {
    if (n < 0) return 0;
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    return p[n];
}

std::string virasoro_relations(const AcceptanceOptions& opt, bool& pass) {
    std::mt19937_64 rng(opt.seed);
    RandomElementSpec spec;
    spec.points = {X, Y};
    spec.f_degree = 4;
    Checks c;
    for (int i = 0; i < 20; ++i) {
        WeightAssignment w;
        w.delta[X] = random_scalar(rng);
        w.delta[Y] = random_scalar(rng);
        w.c = random_scalar(rng);
        Element e = random_element(rng, spec);
        for (int n = -3; n <= 3; ++n)
            for (int m = -3; m <= 3; ++m)
                c(commutator_residual(n, m, w, e).is_zero(), "e" + std::to_string(i) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    pass = c.pass();
    return c.summary("20 elements, -3 <= n,m <= 3");
}

std::string drift_commutator(const AcceptanceOptions& opt, bool& pass) {
    std::mt19937_64 rng(opt.seed + 1);
    Checks c;
    PolyQ x = PolyQ::var(X), f2 = PolyQ::var(Var::f(-2));
    c(q_poly(0, X) == PolyQ(Rational(-2)), "q_0");
    c(q_poly(-1, X) == x * PolyQ(Rational(-4)), "q_-1");
    c(q_poly(-2, X) == x * x * PolyQ(Rational(-6)) + f2 * PolyQ(Rational(8)), "q_-2");
    std::vector<SleVariant> variants = {rho_variant(K), make_chordal(), make_kappa_rho({ScalarK(2)})};
    for (int i = 0; i < 20; ++i) {
        const SleVariant& var = variants[i % variants.size()];
        RandomElementSpec spec;
        spec.points = var.chamber.order();
        spec.f_degree = 4;
        Element e = random_element(rng, spec);
        WeightAssignment w = var.weights();
        Element ae = apply_A(var, 1, e);
        for (int n : {0, -1, -2}) {
            Element comm = apply_L_general(n, w, ae) - apply_A(var, 1, apply_L_general(n, w, e));
            c((comm - ae.times(q_poly(n, X))).is_zero(), "e" + std::to_string(i) + " n=" + std::to_string(n));
        }
    }
    pass = c.pass();
    return c.summary("20 elements, n in {0,-1,-2}");
}

std::string golden_table(bool& pass) {
    SleVariant r = rho_variant(K);
    WeightAssignment w = r.weights();
    ScalarK h = consts::h12(K), c2 = consts::central_charge(K);
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    Checks c;
    c(apply_L_general(-1, w, r.Z).is_zero(), "L_-1 Z");
    Element l2 = d2.scaled(h) - f(-2).scaled(c2 * Rational(1, 2));
    c(apply_L_general(-2, w, r.Z).divided_by(r.Z) == l2, "L_-2");
    c(apply_L_general(-3, w, r.Z).divided_by(r.Z) ==
          (d2 * (v(X) + v(Y))).scaled(h * Rational(2)) - f(-3).scaled(c2 * Rational(2)),
      "L_-3");
    Element quad = v(X) * v(X) * Element(3) + v(X) * v(Y) * Element(4) + v(Y) * v(Y) * Element(3) - f(-2) * Element(6);
    c(apply_L_general(-4, w, r.Z).divided_by(r.Z) == (d2 * quad).scaled(h) - (f(-2) * f(-2) + f(-4) * Element(5)).scaled(c2),
      "L_-4");
    Element ll = (f(-2) * f(-2) - f(-4) * Element(6)).scaled(c2 * Rational(1, 2)) + l2 * l2 +
                 (d2 * (v(X) * v(X) + v(X) * v(Y) + v(Y) * v(Y) - f(-2) * Element(4))).scaled(h * Rational(2));
    c(apply_word({-2, -2}, w, r.Z).divided_by(r.Z) == ll, "L_-2 L_-2");
    pass = c.pass();
    return c.summary();
}

std::string zeta_family(bool& pass) {
    SleVariant r = rho_variant(K);
    WeightAssignment w = r.weights();
    Element zeta = Element::power(Y, X, ScalarK(2) / K);
    Element ratio = Element::power(Y, X, (ScalarK(8) - K) / K);
    ScalarK a = (ScalarK(8) - K) / K;
    Checks c;
    c(zeta.divided_by(r.Z) == ratio, "zeta/Z");
    c(apply_L_general(-1, w, zeta).divided_by(r.Z) == ((v(X) + v(Y)) * ratio).scaled(a), "L_-1 zeta/Z");
    Element num = f(-2).scaled(ScalarK(3) * K * K - ScalarK(10) * K - ScalarK(80)) +
                  (v(X) * v(X) + v(Y) * v(Y)).scaled(ScalarK(44) - ScalarK(6) * K) + v(X) * v(Y) * Element(8);
    c(apply_L_general(-2, w, zeta).divided_by(r.Z) == (num * ratio).scaled((ScalarK(4) * K).inverse()), "L_-2 zeta/Z");
    for (const auto& word : std::vector<OperatorWord>{{}, {-1}, {-2}})
        c(apply_A(r, 1, apply_word(word, w, zeta)).is_zero(), "A annihilates word of length " + std::to_string(word.size()));
    pass = c.pass();
    return c.summary();
}

std::string exceptional_kappa(bool& pass) {
    Checks c;
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    SleVariant six = rho_variant(ScalarK(6));
    c(apply_L_general(-2, six.weights(), six.Z).is_zero(), "kappa=6 L_-2 Z");
    auto chordal6 = build_module(make_chordal(ScalarK(6)), 4);
    c(chordal6.graded_dimensions() == std::vector<size_t>{1, 0, 0, 0, 0}, "kappa=6 chordal module trivial");
    auto rho6 = build_module(six, 4);
    c(rho6.graded_dimensions() == std::vector<size_t>{1, 0, 0, 0, 0}, "kappa=6 SLE(kappa-6) module trivial");

    auto r83 = find_singular_null(rho_variant, 2, Rational(8, 3));
    SleVariant v83 = rho_variant(ScalarK(Rational(8, 3)));
    c(apply_L_general(-2, v83.weights(), v83.Z) == (d2 * v83.Z).scaled(Rational(5, 8)), "kappa=8/3 L_-2 Z = 5/8 (y-x)^2 Z");
    bool s83 = r83.singular_vectors.size() == 1;
    if (s83) {
        auto q = r83.singular_vectors[0].divided_by(d2 * v83.Z).as_polynomial();
        s83 = q && q->is_constant();
    }
    c(s83, "kappa=8/3 singular (y-x)^2 Z");

    auto r10 = find_singular_null(rho_variant, 4, Rational(10));
    c(r10.generic_dimension == 2 && r10.dimension == 1 && !r10.null_vectors.empty(), "kappa=10 level-4 null relation");

    auto r85 = find_singular_null(rho_variant, 4, Rational(8, 5));
    SleVariant v85 = rho_variant(ScalarK(Rational(8, 5)));
    bool s85 = r85.singular_vectors.size() == 1;
    if (s85) {
        auto q = r85.singular_vectors[0].divided_by(d2 * d2 * v85.Z).as_polynomial();
        s85 = q && q->is_constant();
    }
    c(s85, "kappa=8/5 singular (y-x)^4 Z");
    pass = c.pass();
    return c.summary();
}

std::string chordal_dimensions(bool& pass) {
    auto mb = build_module(make_chordal(), 6);
    auto dims = mb.graded_dimensions();
    Checks c;
    c(mb.annihilated, "A-annihilated");
    std::ostringstream os;
    for (int l = 0; l <= 6; ++l) {
        long want = partitions(l) - partitions(l - 2);
        long got = l < static_cast<int>(dims.size()) ? static_cast<long>(dims[l]) : -1;
        c(got == want, "level " + std::to_string(l));
        os << (l ? "," : "") << got;
    }
    pass = c.pass();
    return c.summary("dims " + os.str());
}

std::string fock_consistency(bool& pass) {
    Checks c;
    ScalarK a0 = consts::alpha0(), cc = ScalarK(1) - ScalarK(24) * a0 * a0;
    c(consts::conformal_weight(consts::alpha()) == consts::h12(K), "h(alpha_12)");
    c(cc == consts::central_charge(K), "1 - 24 alpha0^2 = c(kappa)");
    ScalarK a = ScalarK(1) / (ScalarK(3) * ScalarK::t()) + ScalarK::t();
    int vectors = 0;
    for (int lvl = 0; lvl <= 6; ++lvl)
        for (const auto& p : partitions_of(lvl)) {
            ++vectors;
            auto e = FockElement<ScalarK>::basis(a, 6 + 8, p, ScalarK(1));
            bool ok = true;
            for (int n = -4; n <= 4 && ok; ++n)
                for (int m = n + 1; m <= 4 && ok; ++m) {
                    auto lhs = fock_virasoro(n, fock_virasoro(m, e, a0), a0) - fock_virasoro(m, fock_virasoro(n, e, a0), a0);
                    auto rhs = fock_virasoro(n + m, e, a0).scaled(ScalarK(n - m));
                    if (n + m == 0) rhs += e.scaled(cc * ratio(long(n) * n * n - n, 12));
                    ok = (lhs - rhs).is_zero();
                }
            c(ok, "level " + std::to_string(lvl) + " vector");
        }
    pass = c.pass();
    return c.summary(std::to_string(vectors) + " basis vectors, -4 <= n,m <= 4");
}

std::string state_theorem(bool& pass) {
    Checks c;
    int comps_total = 0;
    for (const auto& rho : std::vector<std::vector<ScalarK>>{{K - ScalarK(6)}, {ScalarK(2)}, {ScalarK(1), ScalarK(-3)}, {ScalarK(2), K - ScalarK(8)}}) {
        SleVariant var = make_kappa_rho(rho);
        auto comps = state_components(var, 4, 6);
        comps_total += static_cast<int>(comps.size());
        c(!comps.empty() && comps.front().value == PolyK(ScalarK(1)), "normalisation M=" + std::to_string(rho.size()));
        for (const auto& comp : comps) c(apply_A(var, 1, var.Z * Element(comp.value)).is_zero(), "component M=" + std::to_string(rho.size()));
    }
    auto comps = state_components(make_kappa_rho({}), 4, 4);
    auto mb = build_module(make_chordal(), 4, false);
    for (int lvl = 0; lvl <= 4; ++lvl) {
        std::vector<Element> a, both;
        for (const auto& comp : comps)
            if (level_of(comp.basis) == lvl) a.push_back(Element(comp.value));
        const auto& m = mb.levels[lvl].elements;
        both = a;
        both.insert(both.end(), m.begin(), m.end());
        std::size_t rm = rank(element_coordinates(m));
        c(rank(element_coordinates(a)) == rm && rank(element_coordinates(both)) == rm, "chordal span level " + std::to_string(lvl));
    }
    pass = c.pass();
    return c.summary(std::to_string(comps_total) + " components, Fock level 4, f-degree 6");
}

std::string screening(const AcceptanceOptions& opt, bool& pass) {
    Checks c;
    std::mt19937_64 rng(opt.seed + 9);
    for (int M = 0; M <= 3; ++M) {
        std::vector<ScalarK> a;
        for (int k = 0; k < M; ++k) a.push_back(random_scalar(rng) / ScalarK::t());
        c(coulomb_null_field_residual(a).is_zero(), "Coulomb null field M=" + std::to_string(M));
    }
    for (auto [N, L] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}})
        for (int I = 1; I <= N; ++I)
            c(screening_identity(N, L, I).is_zero(), "screening N=" + std::to_string(N) + " I=" + std::to_string(I));
    for (int I = 1; I <= 2; ++I) c(multiple_state_total_derivative(2, 1, I, 3, 3), "state total derivative I=" + std::to_string(I));
    pass = c.pass();
    return c.summary();
}

std::string combinatorics(bool& pass) {
    Checks c;
    int configs = 0;
    for (int N = 0; N <= 8; ++N)
        for (int L = 0; 2 * L <= N; ++L) {
            auto list = enumerate_configs(N, L);
            configs += static_cast<int>(list.size());
            c(list.size() == config_count(N, L), "count N=" + std::to_string(N) + " L=" + std::to_string(L));
            bool round = true;
            for (const auto& p : list) {
                auto w = config_to_walk(p);
                round = round && is_valid_config(p) && walk_to_config(w) == p && w.back() == N - 2 * L;
            }
            for (std::size_t i = 1; i < list.size(); ++i) round = round && !(list[i] == list[i - 1]);
            c(round, "bijection N=" + std::to_string(N) + " L=" + std::to_string(L));
        }
    pass = c.pass();
    return c.summary(std::to_string(configs) + " configurations");
}

std::string feigin_fuchs(const AcceptanceOptions& opt, bool& pass) {
    Checks c;
    QuadratureSpec spec;
    spec.threads = opt.threads;
    PairingConfig two{2, {{1, 2}}};
    double worst_beta = 0, worst_res2 = 0, worst_res3 = 0;
    for (double kappa : {4.5, 5.0, 6.0, 7.0}) {
        double a = 1 - 4 / kappa;
        double beta = std::exp(2 * std::lgamma(a) - std::lgamma(2 * a));
        for (auto x : std::vector<std::vector<double>>{{0, 1}, {-2, 3}, {0.1, 0.2}, {5, 40}, {-1e-3, 1e-3}}) {
            double oracle = std::pow(x[1] - x[0], (kappa - 6) / kappa) * beta;
            worst_beta = std::max(worst_beta, std::abs(feigin_fuchs_Z(two, x, kappa, spec) / oracle - 1));
        }
        for (int I = 1; I <= 2; ++I) worst_res2 = std::max(worst_res2, null_field_residual(two, {0.2, 1.3}, kappa, I, spec).residual);
    }
    c(worst_beta < 1e-8, "Beta closed form");
    c(worst_res2 < 1e-6, "N=2 null-field residual");
    for (const auto& p : enumerate_configs(3, 1))
        for (int I = 1; I <= 3; ++I)
            worst_res3 = std::max(worst_res3, null_field_residual(p, {-0.4, 0.7, 2.1}, 6, I, spec).residual);
    c(worst_res3 < 1e-5, "N=3 null-field residual");
    double paired = asymptotic_exponent(two, {0, 1}, 6, 1, spec).slope;
    double unpaired = asymptotic_exponent(PairingConfig{2, {}}, {0, 1}, 6, 1, spec).slope;
    PairingConfig four{4, {{1, 2}, {3, 4}}};
    double four_slope = asymptotic_exponent(four, {0, 1, 2, 3}, 6, 1, spec).slope;
    double erased = erased_pair_ratio(four, {0, 1, 2, 3}, 6, 1, 1e-5, spec);
    c(std::abs(paired) < 1e-3, "paired exponent N=2");
    c(std::abs(unpaired - 1.0 / 3) < 1e-3, "unpaired exponent N=2");
    c(std::abs(four_slope) < 5e-3, "paired exponent N=4");
    c(std::abs(erased - 1) < 1e-3, "erased-pair factorisation N=4");
    pass = c.pass();
    std::ostringstream os;
    os << "beta " << fmt("%.1e", worst_beta) << ", residual N=2 " << fmt("%.1e", worst_res2) << ", N=3 "
       << fmt("%.1e", worst_res3) << ", slopes " << fmt("%.2e", paired) << " " << fmt("%.6f", unpaired) << " "
       << fmt("%.2e", four_slope);
    return c.summary(os.str());
}

std::string monte_carlo(const AcceptanceOptions& opt, bool& pass) {
    Checks c;
    std::ostringstream os;
    SimConfig cfg;
    cfg.variant = rho_variant(K);
    cfg.x0 = {0};
    cfg.y0 = {1};
    cfg.dt = 1e-3;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;

    cfg.kappa = 2;
    cfg.K = 4;
    cfg.n_paths = 100000;
    cfg.horizon = 1000;
    auto cap = capacity_expectation(cfg, {0.04, 0.02, 0.01});
    double expected = 2 / (8 - 3 * cfg.kappa);
    double rel = std::abs(cap.extrapolated / expected - 1);
    c(rel < 0.05, "capacity expectation");
    os << "E[g_-2] " << fmt("%.4f", cap.extrapolated) << " vs " << fmt("%.4f", expected) << " (se " << fmt("%.4f", cap.standard_error) << ")";

    cfg.K = 8;
    cfg.n_paths = 10000;
    std::vector<double> slices = {0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5};
    double worst = 0;
    int tested = 0;
    for (double kappa : {2.0, 3.0})
        for (const SleVariant& var : {make_chordal(), rho_variant(K)}) {
            SimConfig d = cfg;
            d.kappa = kappa;
            d.variant = var;
            d.x0 = {0};
            d.y0 = var.M ? std::vector<double>{1} : std::vector<double>{};
            auto mb = build_module(var, 3, false);
            for (const auto& lvl : mb.levels)
                for (std::size_t i = 0; i < lvl.elements.size(); ++i) {
                    auto r = martingale_drift_test(d, lvl.elements[i], ObservableForm::DivideByZ, slices);
                    ++tested;
                    worst = std::max(worst, r.max_abs_z());
                    c(r.pass, to_string(var.kind) + " kappa=" + fmt("%g", kappa) + " level " + std::to_string(lvl.level));
                }
        }
    os << "; " << tested << " module elements, max |z| " << fmt("%.2f", worst);

    SimConfig ctrl = cfg;
    ctrl.kappa = 2;
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    auto remark = martingale_drift_test(ctrl, d2 - f(-2).scaled((ScalarK(3) * K - ScalarK(8)) * ScalarK(Rational(1, 2))),
                                        ObservableForm::Direct, slices);
    c(remark.pass, "capacity martingale");
    auto broken = martingale_drift_test(ctrl, d2 - f(-2), ObservableForm::Direct, slices);
    c(!broken.pass && broken.max_abs_z() > 10, "positive control");
    os << "; control |z| " << fmt("%.1f", broken.max_abs_z());

    SimConfig four = cfg;
    four.kappa = 4;
    four.K = 4;
    auto integ = integrability_check(four, {{1000, 10}, {2000, 100}, {4000, 1000}, {8000, 10000}});
    c(integ.flagged, "kappa=4 non-integrability flagged");
    os << "; kappa=4 means " << fmt("%.1f", integ.means.front()) << ".." << fmt("%.1f", integ.means.back());
    pass = c.pass();
    return c.summary(os.str());
}

struct Entry {
    const char* name;
    double budget;
};

const Entry kEntries[] = {
    {"virasoro-relations", 60},   {"drift-commutator", 60},     {"golden-table", 10},
    {"zeta-family", 10},          {"exceptional-kappa", 120},   {"chordal-dimensions", 300},
    {"fock-consistency", 60},     {"kappa-rho-state", 600},     {"screening-identities", 120},
    {"pairing-combinatorics", 5}, {"feigin-fuchs-numerics", 600}, {"monte-carlo", 1800},
};

} // namespace

int criterion_count() { return 12; }

std::string criterion_name(int id) { return (id >= 1 && id <= 12) ? kEntries[id - 1].name : "unknown"; }

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    r.budget_seconds = (id >= 1 && id <= 12) ? kEntries[id - 1].budget : 0;
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        switch (id) {
        case 1: r.detail = virasoro_relations(opt, pass); break;
        case 2: r.detail = drift_commutator(opt, pass); break;
        case 3: r.detail = golden_table(pass); break;
        case 4: r.detail = zeta_family(pass); break;
        case 5: r.detail = exceptional_kappa(pass); break;
        case 6: r.detail = chordal_dimensions(pass); break;
        case 7: r.detail = fock_consistency(pass); break;
        case 8: r.detail = state_theorem(pass); break;
        case 9: r.detail = screening(opt, pass); break;
        case 10: r.detail = combinatorics(pass); break;
        case 11: r.detail = feigin_fuchs(opt, pass); break;
        case 12: r.detail = monte_carlo(opt, pass); break;
        default: r.detail = "no such criterion";
        }
    } catch (const std::exception& e) {
        pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && r.seconds > r.budget_seconds) {
        pass = false;
        r.detail += "; over time budget";
    }
    r.pass = pass;
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const std::vector<int>& ids) {
    std::vector<int> which = ids;
    if (which.empty())
        for (int i = 1; i <= criterion_count(); ++i) which.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : which) out.push_back(run_criterion(id, opt));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %02d %-22s (%.1f s / %.0f s) ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds, r.budget_seconds);
    return head + r.detail;
}

nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& rs) {
    nlohmann::json out;
    out["schema"] = "slevir.acceptance.v1";
    out["criteria"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : rs) {
        all = all && r.pass;
        out["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"budget_seconds", r.budget_seconds}});
    }
    out["pass"] = all;
    return out;
}

} // namespace slevir
