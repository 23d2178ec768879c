#include "doctest.h"

#include "slevir/fock/state.hpp"
#include "slevir/funcspace/random_element.hpp"
#include "slevir/sle/linear_algebra.hpp"
#include "slevir/sle/module.hpp"

#include <random>

using namespace slevir;

namespace {

const ScalarK T = ScalarK::t(), K = ScalarK::kappa();
const Var X = Var::x(1), Y = Var::y(1);

ScalarK c_free(const ScalarK& a0) { return ScalarK(1) - ScalarK(24) * a0 * a0; }

FockElement<ScalarK> basis_vector(const ScalarK& charge, int max_level, const Partition& p) {
    return FockElement<ScalarK>::basis(charge, max_level, p, ScalarK(1));
}

} // namespace

TEST_CASE("Coulomb gas constants") {
    ScalarK a12 = consts::alpha();
    CHECK(consts::conformal_weight(a12) == consts::h12(K));
    CHECK(c_free(consts::alpha0()) == consts::central_charge(K));
    CHECK(consts::conformal_weight(consts::alpha_minus()) == ScalarK(1));
    CHECK(consts::conformal_weight(consts::alpha_plus()) == ScalarK(1));
}

TEST_CASE("Fock vacuum") {
    ScalarK a = ScalarK(3) / (ScalarK(2) * T);
    ScalarK a0 = consts::alpha0();
    auto v = basis_vector(a, 4, {});
    auto l0 = fock_virasoro(0, v, a0);
    CHECK(l0.component({}) == consts::conformal_weight(a));
    CHECK(l0.terms.size() == 1);
    for (int n = 1; n <= 3; ++n) CHECK(fock_virasoro(n, v, a0).is_zero());
    // L_0 on a level-3 vector
    auto u = basis_vector(a, 4, {1, 2});
    CHECK(fock_virasoro(0, u, a0).component({1, 2}) == consts::conformal_weight(a) + ScalarK(3));
}

TEST_CASE("Heisenberg relations") {
    ScalarK a = ScalarK(5) / T;
    for (int lvl = 0; lvl <= 4; ++lvl)
        for (const auto& p : partitions_of(lvl)) {
            auto e = basis_vector(a, 12, p);
            for (int n = -3; n <= 3; ++n)
                for (int m = -3; m <= 3; ++m) {
                    auto lhs = apply_mode(n, apply_mode(m, e)) - apply_mode(m, apply_mode(n, e));
                    auto rhs = n + m == 0 ? e.scaled(ScalarK(2 * n)) : FockElement<ScalarK>{a, 12, {}};
                    CHECK((lhs - rhs).is_zero());
                }
        }
}

TEST_CASE("Fock Virasoro relations to level 6") {
    ScalarK a = ScalarK(1) / (ScalarK(3) * T) + T;
    ScalarK a0 = consts::alpha0(), c = c_free(a0);
    for (int lvl = 0; lvl <= 6; ++lvl)
        for (const auto& p : partitions_of(lvl)) {
            auto e = basis_vector(a, 6 + 8, p);
            for (int n = -4; n <= 4; ++n)
                for (int m = n + 1; m <= 4; ++m) {
                    auto lhs = fock_virasoro(n, fock_virasoro(m, e, a0), a0) -
                               fock_virasoro(m, fock_virasoro(n, e, a0), a0);
                    auto rhs = fock_virasoro(n + m, e, a0).scaled(ScalarK(n - m));
                    if (n + m == 0) rhs += e.scaled(c * ratio(long(n) * n * n - n, 12));
                    CHECK((lhs - rhs).is_zero());
                }
        }
}

TEST_CASE("level overflow is reported") {
    auto v = basis_vector(T, 2, {1, 1});
    CHECK_THROWS_AS(fock_virasoro(-1, v, consts::alpha0()), LevelOverflow);
    CHECK(fock_virasoro(-1, v, consts::alpha0(), false).is_zero());
}

TEST_CASE("U minus expansion") {
    std::vector<std::pair<ScalarK, Var>> ch{{consts::alpha(), X}, {ScalarK(2) / T, Y}};
    auto vac = FockElement<PolyK>::vacuum(ScalarK(3) / T, 4, PolyK(ScalarK(1)));
    auto u = u_minus(ch, vac);
    CHECK(u.component({}) == PolyK(ScalarK(1)));
    PolyK s1 = PolyK::var(X).scaled(consts::alpha()) + PolyK::var(Y).scaled(ScalarK(2) / T);
    CHECK(u.component({1}) == s1);
    CHECK(u.component({1, 1}) == (s1 * s1).scaled(ScalarK(Rational(1, 2))));
}

TEST_CASE("vertex operator intertwining to level 4") {
    // Laurent polynomials in s = z - o stand in for powers of z.
    const Var Zv = Var::x(2), O = Var::w(4);
    auto zpow = [&](int n) { return Element::power(Zv, O, ScalarK(long(n))); };
    ScalarK alpha = ScalarK(1) / T, beta = ScalarK(2) / (ScalarK(3) * T) - T;
    ScalarK a0 = consts::alpha0();
    const int top = 4, trunc = 6;
    auto W = [&](const FockElement<Element>& u) {
        FockElement<Element> shifted = u;
        shifted.charge = u.charge + alpha;
        shifted.max_level = trunc;
        std::vector<Element> r{Element(1)}, s{Element(1)};
        for (int n = 1; n <= trunc; ++n) {
            r.push_back(zpow(-n).scaled(alpha));
            s.push_back(zpow(n).scaled(alpha));
        }
        return exp_creation(s, exp_annihilation(r, shifted));
    };
    ScalarK ha = consts::conformal_weight(alpha);
    for (int lvl = 0; lvl <= 2; ++lvl)
        for (const auto& p : partitions_of(lvl)) {
            auto u = FockElement<Element>::basis(beta, trunc, p, Element(1));
            auto wu = W(u);
            for (int n = -2; n <= 2; ++n) {
                auto lhs = fock_virasoro(n, wu, a0, false) - W(fock_virasoro(n, u, a0));
                FockElement<Element> rhs{wu.charge, trunc, {}};
                for (const auto& [q, c] : wu.terms)
                    rhs.add(q, zpow(1 + n) * c.derivative(Zv) +
                                   (zpow(n) * c).scaled(alpha * beta * Rational(2) + ha * ScalarK(1 + n)));
                auto diff = (lhs - rhs).truncated(top);
                INFO("n=" << n << " level " << lvl);
                CHECK(diff.is_zero());
            }
        }
}

TEST_CASE("G_f construction") {
    auto g0 = build_Gf(0);
    CHECK(g0.terms.size() == 1);
    CHECK(g0.terms.at({}) == PolyQ(Rational(1)));
    auto g = build_Gf(6);
    CHECK(g.terms.at({-2}) == -PolyQ::var(Var::f(-2)));
    for (const auto& [w, c] : g.terms) CHECK(c.homogeneous_degree() == std::optional<int>(word_level(w)));
    for (int k : {-2, -3}) CHECK(converse_residual(g, k).terms.empty());
    for (int m = -2; m >= -6; --m)
        for (int l = -2; l >= -6; --l)
            CHECK(g.derivative(Var::f(m)).derivative(Var::f(l)) == g.derivative(Var::f(l)).derivative(Var::f(m)));
}

TEST_CASE("straightening") {
    auto s = straighten({-2, -3});
    CHECK(s.size() == 2);
    CHECK(s.at({-3, -2}) == 1);
    CHECK(s.at({-5}) == 1);
}

TEST_CASE("SLE_kappa(rho) state components are local martingales") {
    for (const auto& rho : std::vector<std::vector<ScalarK>>{{ScalarK(2)}, {K - ScalarK(6)}, {ScalarK(1), ScalarK(-3)}}) {
        SleVariant v = make_kappa_rho(rho);
        auto comps = state_components(v, 4, 6);
        CHECK(comps.front().basis.empty());
        CHECK(comps.front().value == PolyK(ScalarK(1)));
        for (const auto& c : comps) {
            INFO("component " << c.basis.size());
            CHECK(apply_A(v, 1, v.Z * Element(c.value)).is_zero());
        }
    }
}

TEST_CASE("chordal state spans the chordal module") {
    SleVariant ch = make_kappa_rho({});
    auto comps = state_components(ch, 4, 4);
    ModuleBasis mb = build_module(make_chordal(), 4, false);
    for (int lvl = 0; lvl <= 4; ++lvl) {
        std::vector<Element> a, both;
        for (const auto& c : comps)
            if (level_of(c.basis) == lvl) a.push_back(Element(c.value));
        const auto& m = mb.levels[size_t(lvl)].elements;
        both = a;
        both.insert(both.end(), m.begin(), m.end());
        size_t ra = rank(element_coordinates(a)), rm = rank(element_coordinates(m));
        CHECK(ra == rm);
        CHECK(rank(element_coordinates(both)) == rm);
    }
}

TEST_CASE("Coulomb null-field equation") {
    std::mt19937_64 rng(41);
    for (int M = 0; M <= 3; ++M) {
        std::vector<ScalarK> a;
        for (int k = 0; k < M; ++k) a.push_back(random_scalar(rng) / T);
        CHECK(coulomb_null_field_residual(a).is_zero());
    }
}

TEST_CASE("screening charges give total derivatives") {
    CHECK(screening_identity(2, 1, 1).is_zero());
    CHECK(screening_identity(2, 1, 2).is_zero());
    for (int I = 1; I <= 3; ++I) CHECK(screening_identity(3, 1, I).is_zero());
    CHECK(multiple_state_total_derivative(2, 1, 1, 3, 3));
    CHECK(multiple_state_total_derivative(2, 1, 2, 3, 3));
}
