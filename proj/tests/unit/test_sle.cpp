#include "doctest.h"

#include "slevir/algebra/lemmas.hpp"
#include "slevir/algebra/map_series.hpp"
#include "slevir/funcspace/random_element.hpp"
#include "slevir/sle/linear_algebra.hpp"
#include "slevir/sle/module.hpp"

#include <random>

using namespace slevir;

namespace {

const Var X = Var::x(1), Y = Var::y(1);
const ScalarK K = ScalarK::kappa();

Element v(Var a) { return Element::var(a); }
Element f(int m) { return Element::var(Var::f(m)); }

// Partition counts by the standard recurrence over part sizes.
long partitions(int n) {
    if (n < 0) return 0;
    std::vector<long> p(size_t(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[size_t(s)] += p[size_t(s - part)];
    return p[size_t(n)];
}

SleVariant rho_variant(const ScalarK& k) { return make_kappa_rho({k - ScalarK(6)}, k); }

} // namespace

TEST_CASE("p polynomials") {
    PolyQ mx = -PolyQ::var(X);
    CHECK(p_poly(-2, mx) == PolyQ(Rational(1)));
    CHECK(p_poly(-3, mx) == PolyQ::var(X));
    CHECK(p_poly(-4, mx) == PolyQ::var(X).pow(2) - PolyQ::var(Var::f(-2)));
    MapSeries fs(12);
    for (int m = -2; m >= -12; --m) CHECK(p_poly(m, mx) == residue_p(fs, PolyQ::var(X), m));
}

TEST_CASE("q polynomials") {
    CHECK(q_poly(0, X) == PolyQ(Rational(-2)));
    CHECK(q_poly(-1, X) == PolyQ::var(X).scaled(Rational(-4)));
    CHECK(q_poly(-2, X) == PolyQ::var(X).pow(2).scaled(Rational(-6)) + PolyQ::var(Var::f(-2)).scaled(Rational(8)));
    CHECK(q_poly(1, X).is_zero());
}

TEST_CASE("drift operator examples") {
    SleVariant ch = make_chordal();
    CHECK(apply_A(ch, 1, v(X)).is_zero());
    CHECK(apply_A(ch, 1, v(X) * v(X)) == Element(K));
    CHECK(apply_A(ch, 1, f(-2)) == Element(2));
    CHECK(apply_A(ch, 1, v(X) * v(X) - f(-2).scaled(K * Rational(1, 2))).is_zero());

    SleVariant r = rho_variant(K);
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    Element cap = (d2 - f(-2).scaled((ScalarK(3) * K - ScalarK(8)) * Rational(1, 2))) * r.Z;
    CHECK(apply_A(r, 1, cap).is_zero());
}

TEST_CASE("variant construction checks null-field equations") {
    CHECK(make_chordal().Z == Element(1));
    SleVariant r = rho_variant(K);
    CHECK(r.Delta + r.h_x(1) + r.h_y[0] == ScalarK(0));
    CHECK(r.h_y[0] == consts::h12(K));
    SleVariant d1 = make_multiple(2, (K - ScalarK(6)) / K);
    SleVariant d2 = make_multiple(2, ScalarK(2) / K);
    CHECK(check_variant(d1).translation_invariant);
    CHECK(check_variant(d2).homogeneous);
    CHECK_THROWS_AS(make_multiple(2, ScalarK(1)), DomainError);
    SleVariant three = make_kappa_rho({ScalarK(2), K - ScalarK(8)});
    CHECK(check_variant(three).translation_invariant);
    std::mt19937_64 rng(5);
    CHECK(positivity_sampled(three, 2.5, 100, rng));
}

TEST_CASE("drift commutes with L_n up to q_n") {
    std::mt19937_64 rng(21);
    std::vector<SleVariant> variants = {make_chordal(), rho_variant(K),
                                        make_kappa_rho({ScalarK(2), ScalarK(1)}),
                                        make_multiple(2, ScalarK(2) / K)};
    for (const auto& var : variants) {
        RandomElementSpec spec;
        spec.points = var.chamber.order();
        spec.max_terms = 2;
        spec.f_degree = 3;
        WeightAssignment w = var.weights();
        for (int trial = 0; trial < 3; ++trial) {
            Element e = random_element(rng, spec);
            for (int I = 1; I <= var.N; ++I)
                for (int n = -3; n <= 2; ++n) {
                    Element lhs = apply_A(var, I, apply_L_general(n, w, e)) -
                                  apply_L_general(n, w, apply_A(var, I, e));
                    Element rhs = apply_A(var, I, e).times(q_poly(n, var.x(I)));
                    INFO(to_string(var.kind) << " I=" << I << " n=" << n);
                    CHECK(lhs + rhs == Element());
                }
        }
    }
}

TEST_CASE("chordal graded dimensions") {
    ModuleBasis mb = build_module(make_chordal(), 6);
    CHECK(mb.annihilated);
    for (int l = 0; l <= 6; ++l) CHECK(long(mb.levels[size_t(l)].dimension()) == partitions(l) - partitions(l - 2));
    for (const auto& lvl : mb.levels)
        for (const auto& e : lvl.elements) CHECK(e.as_polynomial().has_value());
}

TEST_CASE("SLE_kappa(kappa-6) module") {
    SleVariant r = rho_variant(K);
    WeightAssignment w = r.weights();
    ScalarK h = consts::h12(K), c = consts::central_charge(K);
    CHECK(apply_L_general(-1, w, r.Z).is_zero());
    ModuleBasis mb = build_module(r, 4);
    CHECK(mb.annihilated);
    CHECK(mb.graded_dimensions() == std::vector<size_t>{1, 0, 1, 1, 2});
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    Element l2 = d2.scaled(h) - f(-2).scaled(c * Rational(1, 2));
    Element expected = (f(-2) * f(-2) - f(-4) * Element(6)).scaled(c * Rational(1, 2)) + l2 * l2 +
                       (d2 * (v(X) * v(X) + v(X) * v(Y) + v(Y) * v(Y) - f(-2) * Element(4))).scaled(h * Rational(2));
    CHECK(apply_word({-2, -2}, w, r.Z).divided_by(r.Z) == expected);
    for (const auto& lvl : mb.levels)
        for (const auto& e : lvl.elements) {
            CHECK(e.divided_by(r.Z).as_polynomial().has_value());
            for (int n = -2; n <= 2; ++n) CHECK(apply_A(r, 1, apply_L_general(n, w, e)).is_zero());
        }
    ModuleBasis at6 = build_module(rho_variant(ScalarK(6)), 4);
    CHECK(at6.graded_dimensions() == std::vector<size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("zeta family") {
    SleVariant r = rho_variant(K);
    Element zeta = Element::power(Y, X, ScalarK(2) / K);
    ModuleBasis mb = build_module_from(r, zeta, 2);
    CHECK(mb.annihilated);
    WeightAssignment w = r.weights();
    Element ratio = Element::power(Y, X, (ScalarK(8) - K) / K);
    ScalarK a = (ScalarK(8) - K) / K;
    CHECK(zeta.divided_by(r.Z) == ratio);
    CHECK(apply_L_general(-1, w, zeta).divided_by(r.Z) == ((v(X) + v(Y)) * ratio).scaled(a));
    Element num = f(-2).scaled(ScalarK(3) * K * K - ScalarK(10) * K - ScalarK(80)) +
                  (v(X) * v(X) + v(Y) * v(Y)).scaled(ScalarK(44) - ScalarK(6) * K) + v(X) * v(Y) * Element(8);
    CHECK(apply_L_general(-2, w, zeta).divided_by(r.Z) == (num * ratio).scaled((ScalarK(4) * K).inverse()));
}

TEST_CASE("singular and null vectors at special kappa") {
    SingularNullReport g = find_singular_null(rho_variant, 2, std::nullopt);
    CHECK(g.dimension == 1);
    CHECK(g.singular_vectors.empty());

    SingularNullReport r83 = find_singular_null(rho_variant, 2, Rational(8, 3));
    REQUIRE(r83.singular_vectors.size() == 1);
    SleVariant v83 = rho_variant(ScalarK(Rational(8, 3)));
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    CHECK(apply_L_general(-2, v83.weights(), v83.Z) == (d2 * v83.Z).scaled(Rational(5, 8)));
    auto s = r83.singular_vectors[0].divided_by(d2 * v83.Z).as_polynomial();
    REQUIRE(s.has_value());
    CHECK(s->is_constant());

    SingularNullReport r6 = find_singular_null(rho_variant, 2, Rational(6));
    CHECK(r6.dimension == 0);
    CHECK(std::find(r6.zero_words.begin(), r6.zero_words.end(), OperatorWord{-2}) != r6.zero_words.end());

    SingularNullReport r10 = find_singular_null(rho_variant, 4, Rational(10));
    CHECK(r10.generic_dimension == 2);
    CHECK(r10.dimension == 1);
    SleVariant v10 = rho_variant(ScalarK(10));
    auto pair = element_coordinates(std::vector<Element>{apply_word({-2, -2}, v10.weights(), v10.Z),
                                                         apply_word({-4}, v10.weights(), v10.Z)});
    CHECK(rank(pair) == 1);

    SingularNullReport r85 = find_singular_null(rho_variant, 4, Rational(8, 5));
    REQUIRE(r85.singular_vectors.size() == 1);
    SleVariant v85 = rho_variant(ScalarK(Rational(8, 5)));
    auto s4 = r85.singular_vectors[0].divided_by(d2 * d2 * v85.Z).as_polynomial();
    REQUIRE(s4.has_value());
    CHECK(s4->is_constant());
}

TEST_CASE("Mobius covariance") {
    MobiusReport rho = mobius_covariance_check(make_kappa_rho({ScalarK(2), K - ScalarK(8)}));
    CHECK(rho.translation_ok());
    CHECK(rho.dilatation_ok());
    CHECK(rho.special_conformal_ok());
    MobiusReport r = mobius_covariance_check(rho_variant(K));
    CHECK((r.translation_ok() && r.dilatation_ok() && r.special_conformal_ok()));
    MobiusReport ch = mobius_covariance_check(make_chordal());
    ScalarK h = consts::h12(K);
    CHECK(ch.translation_ok());
    CHECK(ch.dilatation == Element(h));
    CHECK(ch.special_conformal == v(X).scaled(h * Rational(2)));
    MobiusReport other = mobius_covariance_check(make_kappa_rho({ScalarK(2)}));
    CHECK_FALSE(other.dilatation_ok());
}

TEST_CASE("pbw words") {
    CHECK(pbw_words(2) == std::vector<OperatorWord>{{-2}, {-1, -1}});
    for (int l = 0; l <= 8; ++l) CHECK(long(pbw_words(l).size()) == partitions(l));
}
