#include "slevir/algebra/errors.hpp"
#include "slevir/geometry/feigin_fuchs.hpp"
#include "slevir/geometry/geometry_json.hpp"
#include "slevir/geometry/pairing.hpp"
#include "slevir/geometry/quadrature.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

using namespace slevir;

namespace {

// Brute force: every set of L disjoint pairs, kept when no two pairs interleave and
// every point strictly inside a pair is itself paired.
std::set<std::vector<std::pair<int, int>>> brute_force_configs(int N, int L) {
    std::set<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) all.emplace_back(a, b);
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (static_cast<int>(cur.size()) == L) {
            std::vector<int> used(N + 1, 0);
            for (auto [a, b] : cur) {
                if (used[a] || used[b]) return;
                used[a] = used[b] = 1;
            }
            for (auto [a, b] : cur) {
                for (auto [c, d] : cur)
                    if (a < c && c < b && b < d) return;
                for (int m = a + 1; m < b; ++m)
                    if (!used[m]) return;
            }
            out.insert(cur);
            return;
        }
        for (std::size_t i = k; i < all.size(); ++i) {
            cur.push_back(all[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

double beta_oracle(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

} // namespace

TEST_CASE("pairings: small cases") {
    CHECK(enumerate_configs(2, 1).size() == 1);
    CHECK(enumerate_configs(4, 2).size() == 2);
    CHECK(enumerate_configs(4, 0).size() == 1);
    auto w = config_to_walk(enumerate_configs(4, 2)[0]);
    CHECK(w.back() == 0);
}

TEST_CASE("pairings: enumeration against brute force and closed formula") {
    for (int N = 0; N <= 8; ++N)
        for (int L = 0; 2 * L <= N; ++L) {
            auto configs = enumerate_configs(N, L);
            auto oracle = brute_force_configs(N, L);
            std::set<std::vector<std::pair<int, int>>> got;
            for (const auto& p : configs) {
                CHECK(is_valid_config(p));
                got.insert(p.pairs);
                auto w = config_to_walk(p);
                CHECK(w.back() == N - 2 * L);
                CHECK(*std::min_element(w.begin(), w.end()) >= 0);
                CHECK(walk_to_config(w) == p);
            }
            CHECK(got.size() == configs.size());
            CHECK(got == oracle);
            CHECK(configs.size() == config_count(N, L));
        }
    CHECK(config_count(8, 4) == 14);
    CHECK(config_count(7, 2) == static_cast<std::uint64_t>(4 * 5040 / (2 * 720)));
}

TEST_CASE("pairings: invalid walks rejected") {
    CHECK_THROWS_AS(walk_to_config({0, -1}), DomainError);
    CHECK_THROWS_AS(walk_to_config({0, 2}), DomainError);
    CHECK_THROWS_AS(enumerate_configs(3, 2), DomainError);
    CHECK(PairingConfig{4, {{1, 4}, {2, 3}}}.nested());
    CHECK_FALSE(is_valid_config(PairingConfig{3, {{1, 3}}}));
}

TEST_CASE("quadrature: Legendre and Chebyshev special cases") {
    auto leg = gauss_jacobi(6, 0, 0);
    double s4 = 0, s0 = 0;
    for (std::size_t k = 0; k < leg.nodes.size(); ++k) {
        s4 += leg.weights[k] * std::pow(leg.nodes[k], 4);
        s0 += leg.weights[k];
    }
    CHECK(s0 == doctest::Approx(2).epsilon(1e-14));
    CHECK(s4 == doctest::Approx(0.4).epsilon(1e-14));
    int n = 7;
    auto cheb = gauss_jacobi(n, -0.5, -0.5);
    for (int k = 0; k < n; ++k) {
        double node = -std::cos((2 * k + 1) * std::numbers::pi / (2 * n));
        CHECK(cheb.nodes[k] == doctest::Approx(node).epsilon(1e-13));
        CHECK(cheb.weights[k] == doctest::Approx(std::numbers::pi / n).epsilon(1e-13));
    }
    // a + b = -1 hits the removable 0/0 in the recurrence
    auto odd = gauss_jacobi(5, -0.5, -0.5 + 0.0);
    CHECK(odd.nodes.size() == 5);
    auto edge = gauss_jacobi(8, -0.6, -0.4);
    double mass = 0;
    for (double v : edge.weights) mass += v;
    CHECK(mass == doctest::Approx(beta_oracle(0.4, 0.6)).epsilon(1e-12));  // 2^{a+b+1} = 1
    CHECK_THROWS_AS(gauss_jacobi(4, -1, 0), DomainError);
}

TEST_CASE("feigin-fuchs: two points against the Beta closed form") {
    PairingConfig p{2, {{1, 2}}};
    std::vector<std::vector<double>> geoms = {{0, 1}, {-2, 3}, {0.1, 0.2}, {5, 40}, {-1e-3, 1e-3}};
    for (double kappa : {4.5, 5.0, 6.0, 7.0}) {
        double a = 1 - 4 / kappa;
        for (auto& x : geoms) {
            double oracle = std::pow(x[1] - x[0], (kappa - 6) / kappa) * beta_oracle(a, a);
            double z = feigin_fuchs_Z(p, x, kappa);
            CHECK(std::abs(z / oracle - 1) < 1e-8);
        }
    }
    // kappa = 5: numeric over closed form is one constant across separations
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 10; ++k) {
        std::vector<double> x = {0.3, 0.3 + std::pow(1.7, k - 4)};
        double r = feigin_fuchs_Z(p, x, 5) / pair_closed_form(x[0], x[1], 5);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK((hi - lo) / lo < 1e-8);
    // kappa <= 4 goes through the continued closed form, poles reported
    CHECK(feigin_fuchs_Z(p, {0, 2}, 3) == doctest::Approx(pair_closed_form(0, 2, 3)));
    CHECK_THROWS_AS(pair_closed_form(0, 1, 4), PoleError);
    CHECK_THROWS_AS(pair_closed_form(0, 1, 2), PoleError);
}

TEST_CASE("feigin-fuchs: domain errors") {
    CHECK_THROWS_AS(feigin_fuchs_Z(PairingConfig{3, {{1, 2}}}, {0, 1, 2}, 4), DomainError);
    CHECK_THROWS_AS(feigin_fuchs_Z(PairingConfig{4, {{1, 4}, {2, 3}}}, {0, 1, 2, 3}, 6), DomainError);
    CHECK_THROWS_AS(feigin_fuchs_Z(PairingConfig{2, {{1, 2}}}, {1, 0}, 6), DomainError);
}

TEST_CASE("feigin-fuchs: null field, translation, scaling") {
    PairingConfig two{2, {{1, 2}}};
    for (double kappa : {5.0, 6.0, 7.0})
        for (int I = 1; I <= 2; ++I) CHECK(null_field_residual(two, {0.2, 1.3}, kappa, I).residual < 1e-6);

    std::vector<double> x3 = {-0.4, 0.7, 2.1};
    for (const auto& p : enumerate_configs(3, 1))
        for (int I = 1; I <= 3; ++I) {
            auto r = null_field_residual(p, x3, 6, I);
            CHECK(r.residual < 1e-5);
            CHECK(r.noise_floor < 1e-5);
        }
    // Perturbing kappa in the operator but not in Z must break the identity.
    PairingConfig p3{3, {{1, 2}}};
    CHECK(null_field_residual(p3, x3, 6, 3).residual < 1e-6);

    std::vector<double> x4 = {0, 0.8, 1.9, 3.2};
    PairingConfig p4{4, {{1, 2}, {3, 4}}};
    for (int I = 1; I <= 4; ++I) CHECK(null_field_residual(p4, x4, 6.5, I).residual < 1e-5);

    for (const auto& [p, x] : std::vector<std::pair<PairingConfig, std::vector<double>>>{
             {two, {0.2, 1.3}}, {p3, x3}, {PairingConfig{3, {{2, 3}}}, x3}, {p4, x4}}) {
        auto y = x;
        for (double& v : y) v += 3.7;
        double z = feigin_fuchs_Z(p, x, 5.5);
        CHECK(std::abs(feigin_fuchs_Z(p, y, 5.5) / z - 1) < 1e-10);
        for (double lambda : {0.3, 2.0, 11.0}) CHECK(scaling_error(p, x, 5.5, lambda) < 1e-6);
    }
}

TEST_CASE("feigin-fuchs: homogeneity degree matches the weight difference") {
    for (double kappa : {4.5, 6.0, 7.3})
        for (int N = 1; N <= 6; ++N)
            for (int L = 0; 2 * L <= N; ++L) {
                auto h1r = [&](int r) { return (1.0 - r) / 2 + (r * r - 1.0) / 4 * 4 / kappa; };
                CHECK(homogeneity_degree(N, L, kappa) == doctest::Approx(h1r(1 + N - 2 * L) - N * h1r(2)));
            }
}

TEST_CASE("feigin-fuchs: collapse exponents") {
    auto paired = asymptotic_exponent(PairingConfig{2, {{1, 2}}}, {0, 1}, 6, 1);
    CHECK(paired.reliable);
    CHECK(std::abs(paired.slope) < 1e-3);
    auto rays = asymptotic_exponent(PairingConfig{2, {}}, {0, 1}, 6, 1);
    CHECK(std::abs(rays.slope - 1.0 / 3) < 1e-3);
    auto p5 = asymptotic_exponent(PairingConfig{2, {{1, 2}}}, {0, 1}, 5, 1);
    CHECK(std::abs(p5.slope - (5.0 - 6) / 5) < 1e-3);

    PairingConfig p4{4, {{1, 2}, {3, 4}}};
    std::vector<double> x4 = {0, 1, 2, 3};
    auto fit = asymptotic_exponent(p4, x4, 6, 1);
    CHECK(std::abs(fit.slope) < 5e-3);
    CHECK(std::abs(asymptotic_exponent(p4, x4, 6, 3).slope) < 5e-3);
    auto fit7 = asymptotic_exponent(p4, x4, 7, 1);
    CHECK(std::abs(fit7.slope - 1.0 / 7) < 5e-3);
    CHECK(std::abs(erased_pair_ratio(p4, x4, 6, 1, 1e-5) - 1) < 1e-3);
    CHECK(std::abs(erased_pair_ratio(p4, x4, 7, 3, 1e-5) - 1) < 1e-3);
    // Unpaired neighbours where one is an arc endpoint: the arc end near the other
    // point contributes d^{2/kappa + 1 - 8/kappa}, which only loses to d^{2/kappa} for kappa > 8.
    auto mixed9 = asymptotic_exponent(PairingConfig{3, {{1, 2}}}, {0, 1, 2}, 9, 2);
    CHECK(std::abs(mixed9.slope - 2.0 / 9) < 5e-3);
}

TEST_CASE("feigin-fuchs: deterministic for any worker count") {
    PairingConfig p4{4, {{1, 2}, {3, 4}}};
    std::vector<double> x = {0, 0.7, 1.5, 2.9};
    QuadratureSpec one, many;
    one.threads = 1;
    many.threads = 5;
    double a = feigin_fuchs_Z(p4, x, 6.2, one);
    CHECK(a == feigin_fuchs_Z(p4, x, 6.2, many));
    CHECK(a == feigin_fuchs_Z(p4, x, 6.2, one));
}

TEST_CASE("feigin-fuchs: sweep output") {
    auto rows = geometry_sweep(4, 2, {0, 1, 2, 3}, 6, {}, true, false);
    REQUIRE(rows.size() == 2);
    int ok = 0, failed = 0;
    for (auto& r : rows) (r.Z ? ok : failed)++;
    CHECK(ok == 1);
    CHECK(failed == 1);
    auto j = geometry_to_json(rows);
    CHECK(j["schema"] == "slevir.geometry.v1");
    CHECK(geometry_to_csv(rows).find("uudd") != std::string::npos);
    auto c = configs_to_json(4, 2);
    CHECK(c["count"] == 2);
    CHECK(c["configs"].size() == 2);
}
