#include "doctest.h"

#include "slevir/funcspace/random_element.hpp"
#include "slevir/virasoro/operators.hpp"
#include "slevir/virasoro/residues.hpp"

#include <random>

using namespace slevir;

namespace {

const Var X = Var::x(1), Y = Var::y(1);
const ScalarK K = ScalarK::kappa();

WeightAssignment generic_weights(std::mt19937_64& rng) {
    WeightAssignment w;
    w.delta[X] = random_scalar(rng);
    w.delta[Y] = random_scalar(rng);
    w.c = random_scalar(rng);
    return w;
}

// SLE_kappa(kappa-6): both weights equal h = (6-kappa)/(2 kappa).
WeightAssignment rho_weights() {
    WeightAssignment w;
    w.delta[X] = consts::h12(K);
    w.delta[Y] = consts::h12(K);
    w.c = consts::central_charge(K);
    return w;
}

Element rho_partition() { return Element::power(Y, X, (K - ScalarK(6)) / K); }


Element v(Var a) { return Element::var(a); }
Element f(int m) { return Element::var(Var::f(m)); }

} // namespace

TEST_CASE("residue coefficients of low modes") {
    CHECK(schwarzian_mode(-2) == PolyQ::var(Var::f(-2)).scaled(Rational(-6)));
    CHECK(translation_mode(-1, X) == PolyQ::var(X).pow(2) - PolyQ::var(Var::f(-2)).scaled(Rational(3)));
    CHECK(weight_mode(0, X) == PolyQ(Rational(1)));
    CHECK(weight_mode(1, X).is_zero());
    CHECK(coefficient_mode(3, -2).is_zero());
    CHECK(coefficient_mode(2, -2) == PolyQ(Rational(-1)));
    CHECK_THROWS_AS(coefficient_mode(-10, -8), DepthError);
}

TEST_CASE("closed forms agree with residue formula") {
    std::mt19937_64 rng(11);
    RandomElementSpec spec;
    spec.points = {X, Y};
    for (int i = 0; i < 50; ++i) {
        WeightAssignment w = generic_weights(rng);
        Element e = random_element(rng, spec);
        for (int n = -2; n <= 4; ++n) {
            INFO("n=" << n << " e=" << e.to_string());
            CHECK(apply_L_explicit(n, w, e) == apply_L_general(n, w, e));
        }
    }
}

TEST_CASE("virasoro relations on random elements") {
    std::mt19937_64 rng(12);
    RandomElementSpec spec;
    spec.points = {X, Y};
    spec.max_terms = 2;
    for (int i = 0; i < 3; ++i) {
        WeightAssignment w = generic_weights(rng);
        Element e = random_element(rng, spec);
        for (int n = -3; n <= 3; ++n)
            for (int m = -3; m <= 3; ++m) {
                INFO("n=" << n << " m=" << m << " e=" << e.to_string());
                CHECK(commutator_residual(n, m, w, e).is_zero());
            }
    }
    WeightAssignment w = generic_weights(rng);
    CHECK(commutator_residual(2, -2, w, Element(1)).is_zero());
    CHECK(commutator_residual(4, -4, w, Element(1)).is_zero());
}

TEST_CASE("grading lowers degree by n") {
    std::mt19937_64 rng(13);
    RandomElementSpec spec;
    spec.points = {X, Y};
    WeightAssignment w = generic_weights(rng);
    int homogeneous = 0;
    for (int i = 0; i < 200 && homogeneous < 20; ++i) {
        Element e = random_element(rng, spec);
        auto d = e.homogeneity_degree();
        if (!d) continue;
        ++homogeneous;
        for (int n = -3; n <= 3; ++n) {
            Element r = apply_L_general(n, w, e);
            if (r.is_zero()) continue;
            auto rd = r.homogeneity_degree();
            REQUIRE(rd.has_value());
            CHECK(*rd == *d - ScalarK(long(n)));
        }
    }
    CHECK(homogeneous >= 20);
}

TEST_CASE("SLE_kappa(kappa-6) partition function table") {
    WeightAssignment w = rho_weights();
    Element z = rho_partition();
    ScalarK h = consts::h12(K), c = consts::central_charge(K);
    Element d2 = (v(Y) - v(X)) * (v(Y) - v(X));
    CHECK(apply_L_explicit(0, w, z).is_zero());
    CHECK(apply_L_explicit(1, w, z).is_zero());
    CHECK(apply_L_explicit(2, w, z).is_zero());
    CHECK(apply_L_explicit(-2, w, z) == (d2.scaled(h) - f(-2).scaled(c * Rational(1, 2))) * z);
    CHECK(apply_L_general(-3, w, z).divided_by(z) ==
          (d2 * (v(X) + v(Y))).scaled(h * Rational(2)) - f(-3).scaled(c * Rational(2)));
    Element quad = v(X) * v(X) * Element(3) + v(X) * v(Y) * Element(4) + v(Y) * v(Y) * Element(3) -
                   f(-2) * Element(6);
    CHECK(apply_L_general(-4, w, z).divided_by(z) ==
          (d2 * quad).scaled(h) - (f(-2) * f(-2) + f(-4) * Element(5)).scaled(c));
}

TEST_CASE("L2 kills f-independent elements") {
    std::mt19937_64 rng(14);
    RandomElementSpec spec;
    spec.points = {X, Y};
    spec.f_degree = 0;
    WeightAssignment w = generic_weights(rng);
    for (int i = 0; i < 10; ++i) CHECK(apply_L_explicit(2, w, random_element(rng, spec)).is_zero());
}

TEST_CASE("hatted operators by both routes") {
    std::mt19937_64 rng(15);
    WeightAssignment w = rho_weights();
    Element z = rho_partition();
    RandomElementSpec spec;
    spec.points = {X, Y};
    spec.prefactors = false;
    for (int i = 0; i < 30; ++i) {
        int n = int(rng() % 7) - 4;
        Element phi = random_element(rng, spec);
        Element a = apply_L_hat(n, w, z, phi), b = apply_L_hat_formula(n, w, z, phi);
        CHECK(a == b);
        CHECK(a.as_polynomial().has_value());
    }
    // word on 1 reproduces word on Z divided by Z
    Element one(1);
    Element hat = apply_L_hat(-1, w, z, apply_L_hat(-2, w, z, one));
    CHECK(hat == apply_word({-1, -2}, w, z).divided_by(z));
}

TEST_CASE("depth overflow is reported") {
    WeightAssignment w = rho_weights();
    CHECK_THROWS_AS(apply_L_explicit(-2, w, f(-14)), DepthError);
    CHECK_THROWS_AS(apply_L_general(-2, w, f(-14)), DepthError);
}
