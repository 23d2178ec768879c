#include "slevir/algebra/errors.hpp"
#include "slevir/sim/loewner.hpp"
#include "slevir/sim/monte_carlo.hpp"

#include <doctest.h>

#include <cmath>

using namespace slevir;

namespace {

double binom_real(double a, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1);
    return r;
}

// g_t(z) = X + sqrt((z - X)^2 + 4t) for a frozen driving point, expanded at infinity.
double frozen_coefficient(int m, double X, double t) {
    double s = 0;
    for (int k = 1; 2 * k <= -m; ++k) {
        int j = -m - 2 * k;
        s += binom_real(0.5, k) * std::pow(4 * t, k) * binom_real(2 * k - 2 + j, j) * std::pow(X, j);
    }
    return s;
}

std::vector<double> frozen_euler(double X, double T, int steps, int K) {
    std::vector<double> g(K - 1, 0.0), p;
    double h = T / steps;
    for (int s = 0; s < steps; ++s) {
        loewner_p(X, g, p);
        for (std::size_t k = 0; k < g.size(); ++k) g[k] += 2 * p[k + 2] * h;
    }
    return g;
}

Element diff_sq() {
    Element d = Element::var(Var::y(1)) - Element::var(Var::x(1));
    return d * d;
}

SimConfig kappa_rho_config(double kappa) {
    SimConfig cfg;
    cfg.variant = make_kappa_rho({ScalarK::kappa() - ScalarK(6)});
    cfg.kappa = kappa;
    cfg.x0 = {0};
    cfg.y0 = {1};
    cfg.K = 4;
    return cfg;
}

} // namespace

TEST_CASE("sim: Loewner p recursion matches the symbolic polynomials") {
    std::vector<double> g = {0.3, -1.2, 0.7, 2.5, -0.4};
    double X = 0.85;
    std::vector<double> p;
    loewner_p(X, g, p);
    for (int m = -2; m >= -6; --m) {
        PolyQ sym = p_poly(m, -PolyQ::var(Var::x(1)));
        double v = sym.evaluate(
            [&](Var var) { return var.kind() == Var::Kind::X ? X : g[-var.index() - 2]; },
            [](const Rational& c) { return c.get_d(); });
        CHECK(p[-m] == doctest::Approx(v).epsilon(1e-13));
    }
}

TEST_CASE("sim: frozen driving point, coefficient flow converges at first order") {
    const double X = 0.6, T = 0.4;
    const int K = 6;
    auto coarse = frozen_euler(X, T, 200, K), fine = frozen_euler(X, T, 400, K), finer = frozen_euler(X, T, 800, K);
    for (int m = -2; m >= -K; --m) {
        double exact = frozen_coefficient(m, X, T);
        int k = -m - 2;
        CHECK(coarse[k] == doctest::Approx(exact).epsilon(0.05));
        double e1 = coarse[k] - exact, e2 = fine[k] - exact, e3 = finer[k] - exact;
        if (m == -2) {
            CHECK(std::abs(e1) < 1e-12);  // dg_{-2} = 2 dt exactly
            continue;
        }
        // Low coefficients are polynomials of low degree in t, where Euler (or one
        // Richardson step) is already exact; only ratios above roundoff are meaningful.
        if (std::abs(e1) > 1e-10) CHECK(e1 / e2 == doctest::Approx(2).epsilon(0.05));
        double r1 = 2 * fine[k] - coarse[k] - exact, r2 = 2 * finer[k] - fine[k] - exact;
        if (std::abs(r1) > 1e-10) CHECK(r1 / r2 == doctest::Approx(4).epsilon(0.1));
        CHECK(std::abs(2 * finer[k] - fine[k] - exact) < 1e-5);
        (void)e3;
    }
}

TEST_CASE("sim: paths are reproducible and independent per index") {
    auto cfg = kappa_rho_config(2);
    auto a = simulate_path(cfg, 7), b = simulate_path(cfg, 7), c = simulate_path(cfg, 8);
    CHECK(a.times == b.times);
    CHECK(a.x == b.x);
    CHECK(a.g == b.g);
    CHECK(a.x != c.x);
    CHECK(a.reason == StopReason::Buffer);
    CHECK(a.g.front()[0] == 0);
    for (std::size_t i = 0; i < a.times.size(); ++i) CHECK(a.g[i][0] == doctest::Approx(2 * a.times[i]));
    auto thin = simulate_path(cfg, 7, 0.05);
    CHECK(thin.times.size() < a.times.size());
    CHECK(thin.stop_time == a.stop_time);
}

TEST_CASE("sim: chordal driving function has variance kappa t") {
    SimConfig cfg;
    cfg.variant = make_chordal();
    cfg.kappa = 3;
    cfg.x0 = {0};
    cfg.dt = 0.01;
    cfg.horizon = 1;
    Moments m;
    const int n = 4000;
    for (int i = 0; i < n; ++i) m.add(simulate_path(cfg, i, 1).x.back()[0]);
    double se = cfg.kappa * std::sqrt(2.0 / (n - 1));
    CHECK(std::abs(m.variance() - cfg.kappa) < 3 * se);
    CHECK(std::abs(m.mean()) < 3 * std::sqrt(cfg.kappa / n));
}

TEST_CASE("sim: capacity martingale passes, positive control fails") {
    auto cfg = kappa_rho_config(2);
    cfg.n_paths = 3000;
    std::vector<double> slices = {0.05, 0.1, 0.2, 0.3};
    Element remark = diff_sq() - Element::var(Var::f(-2)).scaled((ScalarK::kappa() * ScalarK(3) - ScalarK(8)) * ScalarK(Rational(1, 2)));
    auto good = martingale_drift_test(cfg, remark, ObservableForm::Direct, slices);
    CHECK(good.pass);
    auto bad = martingale_drift_test(cfg, diff_sq() - Element::var(Var::f(-2)), ObservableForm::Direct, slices);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_abs_z() > 10);
    auto j = drift_report_to_json(good, "kappa-rho");
    CHECK(j["pass"] == true);
    CHECK(j["z_scores"].size() == slices.size());
}

TEST_CASE("sim: capacity expectation and the non-integrable regime") {
    auto cfg = kappa_rho_config(2);
    cfg.n_paths = 4000;
    cfg.horizon = 200;
    auto cap = capacity_expectation(cfg, {0.01, 0.04, 0.02});
    CHECK(cap.eps.front() == 0.04);
    CHECK(std::abs(cap.extrapolated - 1) < 4 * cap.standard_error + 0.05);
    auto four = kappa_rho_config(4);
    auto r4 = integrability_check(four, {{400, 10}, {800, 100}, {1600, 1000}});
    CHECK(r4.flagged);
    auto r2 = integrability_check(cfg, {{400, 10}, {800, 100}, {1600, 1000}});
    CHECK_FALSE(r2.flagged);
}

TEST_CASE("sim: configuration errors") {
    auto cfg = kappa_rho_config(2);
    cfg.y0 = {};
    CHECK_THROWS_AS(PathIntegrator(cfg, 0), DomainError);
    cfg = kappa_rho_config(2);
    cfg.y0 = {-1};
    CHECK_THROWS_AS(PathIntegrator(cfg, 0), DomainError);
    cfg = kappa_rho_config(2);
    cfg.dt = 0;
    CHECK_THROWS_AS(PathIntegrator(cfg, 0), DomainError);
    cfg = kappa_rho_config(2);
    CHECK_THROWS_AS(martingale_drift_test(cfg, Element::var(Var::f(-6)), ObservableForm::Direct, {0.1}), DomainError);
}
