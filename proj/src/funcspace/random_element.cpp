#include "slevir/funcspace/random_element.hpp"

namespace slevir {

namespace {

long small(std::mt19937_64& rng, long span) { return static_cast<long>(rng() % static_cast<unsigned long>(2 * span + 1)) - span; }

// Random partition-like f-monomial of weighted degree exactly d.
Monomial random_f_monomial(std::mt19937_64& rng, int d) {
    Monomial m;
    while (d >= 2) {
        int part = 2 + static_cast<int>(rng() % static_cast<unsigned>(d - 1));
        if (d - part == 1) part = d;  // no f_{-1}
        Var v = Var::f(-part);
        m.set(v, m[v] + 1);
        d -= part;
    }
    return m;
}

} // namespace

ScalarK random_scalar(std::mt19937_64& rng, bool even_only) {
    ScalarK k = ScalarK::kappa();
    ScalarK s = ScalarK(small(rng, 4)) + ScalarK(small(rng, 3)) * k;
    if (rng() % 2) s += ScalarK(small(rng, 5)) / k;
    if (!even_only && rng() % 3 == 0) s += ScalarK(small(rng, 2)) * ScalarK::t();
    if (s.is_zero()) s = ScalarK(1);
    if (rng() % 4 == 0) s /= ScalarK(1 + static_cast<long>(rng() % 3));
    return s;
}

PolyK random_polynomial(std::mt19937_64& rng, const RandomElementSpec& spec) {
    PolyK p;
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.max_terms));
    for (int i = 0; i < terms; ++i) {
        int fd = static_cast<int>(rng() % static_cast<unsigned>(spec.f_degree + 1));
        if (fd == 1) fd = 0;
        Monomial m = fd ? random_f_monomial(rng, fd) : Monomial();
        for (Var v : spec.points) {
            int e = static_cast<int>(rng() % static_cast<unsigned>(spec.point_degree + 1));
            if (rng() % 2) e = 0;
            m.set(v, e);
        }
        p.add_term(m, random_scalar(rng, spec.even_only));
    }
    if (p.is_zero()) p = PolyK(ScalarK(1));
    return p;
}

Element random_element(std::mt19937_64& rng, const RandomElementSpec& spec) {
    Element e;
    const int blocks = spec.prefactors ? 1 + static_cast<int>(rng() % 2) : 1;
    const ScalarK k = ScalarK::kappa();
    for (int b = 0; b < blocks; ++b) {
        Prefactor pre;
        if (spec.prefactors) {
            for (size_t i = 0; i + 1 < spec.points.size(); ++i) {
                for (size_t j = i + 1; j < spec.points.size(); ++j) {
                    if (rng() % 2) continue;
                    ScalarK x;
                    switch (rng() % 4) {
                    case 0: x = (k - ScalarK(6)) / k; break;
                    case 1: x = ScalarK(2) / k; break;
                    case 2: x = ScalarK(small(rng, 3)) + ScalarK(1 + static_cast<long>(rng() % 8)) / k; break;
                    default: x = ScalarK(-1 - static_cast<long>(rng() % 2)); break;
                    }
                    pre[PairKey{spec.points[i], spec.points[j]}] = x;
                }
            }
        }
        e += Element::from_block(std::move(pre), random_polynomial(rng, spec));
    }
    return e;
}

} // namespace slevir
