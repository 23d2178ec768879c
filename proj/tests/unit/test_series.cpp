#include "doctest.h"

#include "slevir/algebra/lemmas.hpp"
#include "slevir/algebra/map_series.hpp"

#include <cmath>
#include <random>

using namespace slevir;

namespace {

PolyQ F(int m) { return PolyQ::var(Var::f(m)); }

bool same_on_common_window(const SeriesQ& a, const SeriesQ& b) {
    int lo = std::max(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    for (int k = lo; k <= hi; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

} // namespace

TEST_CASE("powers of the map") {
    MapSeries f(8);
    SeriesQ s = f.series();
    CHECK(s.hi() == 1);
    CHECK(s.lo() == -7);
    CHECK(s.coeff(1) == PolyQ(1));
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(-1) == F(-2));
    CHECK(s.coeff(-2) == F(-3));
    CHECK_THROWS_AS(s.coeff(-8), WindowError);

    SeriesQ inv = f.power(-1);
    CHECK(inv.coeff(-1) == PolyQ(1));
    CHECK(inv.coeff(-2).is_zero());
    CHECK(inv.coeff(-3) == -F(-2));
    CHECK(inv.coeff(-4) == -F(-3));
    SeriesQ one = inv * s;
    for (int k = one.lo(); k <= one.hi(); ++k) CHECK(one.coeff(k) == (k == 0 ? PolyQ(1) : PolyQ()));

    SeriesQ p0 = f.power(0);
    CHECK(p0.coeff(0) == PolyQ(1));
    CHECK(p0.coeff(-3).is_zero());
}

TEST_CASE("power windows and homogeneity") {
    MapSeries f(8);
    for (int n = -5; n <= 3; ++n) {
        SeriesQ p = f.power(n);
        CHECK(p.lo() == n - 8);
        for (int k = p.lo(); k <= p.hi(); ++k) {
            auto d = p.coeff(k).homogeneous_degree();
            if (!p.coeff(k).is_zero()) CHECK(*d == n - k);
        }
    }
}

TEST_CASE("products of powers") {
    MapSeries f(8);
    for (int n = -3; n <= 2; ++n)
        for (int m = -3; m <= 2; ++m) CHECK(same_on_common_window(f.power(n) * f.power(m), f.power(n + m)));
}

TEST_CASE("change of variables residue") {
    MapSeries f(8);
    SeriesQ fp = f.derivative();
    for (int n = -5; n <= 3; ++n) CHECK((fp * f.power(n)).residue() == PolyQ(n == -1 ? 1 : 0));
    CHECK(f.series().coeff(-1) == F(-2));  // Res z^0 f(z)
    CHECK(SeriesQ::monomial(PolyQ(1), -1).residue() == PolyQ(1));
}

TEST_CASE("Schwarzian") {
    MapSeries f(8);
    SeriesQ S = f.schwarzian();
    CHECK(S.lo() == -10);
    CHECK(S.hi() == -4);
    CHECK(S.coeff(-4) == F(-2).scaled(-6));
    CHECK(S.coeff(-5) == F(-3).scaled(-24));
    CHECK(S.coeff(-6) == F(-4).scaled(-60) - (F(-2) * F(-2)).scaled(12));
    SeriesQ I = MapSeries::identity(8).schwarzian();
    for (int k = I.lo(); k <= I.hi(); ++k) CHECK(I.coeff(k).is_zero());
}

TEST_CASE("Schwarzian of z + s/z against direct differentiation") {
    std::vector<PolyQ> c(7);
    c[0] = PolyQ::var(Var::aux(1));
    MapSeries f(c);
    SeriesQ S = f.schwarzian();
    CHECK(S.coeff(-6) == (PolyQ::var(Var::aux(1)) * PolyQ::var(Var::aux(1))).scaled(-12));
    // Closed form of Sf for f = z + s/z, evaluated at a large z.
    const double s = 0.3, z = 20.0;
    const double f1 = 1 - s / (z * z), f2 = 2 * s / (z * z * z), f3 = -6 * s / (z * z * z * z);
    const double exact = f3 / f1 - 1.5 * (f2 / f1) * (f2 / f1);
    double approx = 0;
    for (int k = S.lo(); k <= S.hi(); ++k)
        approx += S.coeff(k).evaluate([&](Var) { return s; }, [](const Rational& q) { return q.get_d(); }) *
                  std::pow(z, k);
    CHECK(std::abs(approx - exact) < 1e-9 * std::abs(exact));
}

TEST_CASE("inverse power expansion") {
    const PolyQ x = PolyQ::var(Var::x(1));
    SeriesQ g = MapSeries::identity(8).inverse_power_expansion(x, 1);
    for (int k = -1; k >= g.lo(); --k) CHECK(g.coeff(k) == x.pow(-1 - k));

    MapSeries f(8);
    for (int j = 0; j < 3; ++j) {
        SeriesQ e = f.inverse_power_expansion(x, 1 + j);
        for (int k = e.lo(); k <= e.hi(); ++k)
            if (!e.coeff(k).is_zero()) CHECK(*e.coeff(k).homogeneous_degree() == -1 - j - k);
    }
    // d/dx 1/(f-x) = 1/(f-x)^2
    SeriesQ e1 = f.inverse_power_expansion(x, 1);
    SeriesQ e2 = f.inverse_power_expansion(x, 2);
    SeriesQ d = e1.map_coeffs<PolyQ>([&](const PolyQ& c) { return c.derivative(Var::x(1)); });
    CHECK(same_on_common_window(d, e2));
}

TEST_CASE("expansion identities of the appendix") {
    std::mt19937_64 rng(2024);
    for (LemmaCase which : {LemmaCase::A1a, LemmaCase::A1b, LemmaCase::A1c, LemmaCase::A2}) {
        for (int i = 0; i < 20; ++i) {
            LemmaInputs in = LemmaInputs::random(rng);
            if (which == LemmaCase::A1c) in.depth = 6;
            LemmaResidual res = lemma_identity_residual(which, in);
            INFO(std::string(lemma_case_name(which)), " instance ", i);
            CHECK(res.checked > 3);
            CHECK(res.vanishes);
        }
    }
    LemmaInputs id;
    id.identity_map = true;
    id.p = 2;
    CHECK(lemma_identity_residual(LemmaCase::A1b, id).vanishes);
}
