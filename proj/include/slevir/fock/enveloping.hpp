#pragma once

#include "slevir/fock/fock_space.hpp"

#include <map>
#include <vector>

namespace slevir {

// L_{k_1} L_{k_2} ... with k_1 <= k_2 <= ... (PBW order for the negative part of vir).
using VirWord = std::vector<int>;

inline int word_level(const VirWord& w) {
    int s = 0;
    for (int k : w) s -= k;
    return s;
}

// Rewrites a product of negative modes in PBW order using [L_a, L_b] = (a-b) L_{a+b}.
std::map<VirWord, Rational> straighten(const VirWord& w);

// Truncated element of the completed enveloping algebra: word -> polynomial in the f_m.
struct EnvelopingElement {
    int degree = 0;  // words of level <= degree are kept
    std::map<VirWord, PolyQ> terms;

    void add(const VirWord& w, const PolyQ& c);
    // this * L_k (right multiplication), straightened; words above `degree` dropped.
    EnvelopingElement times_L(int k) const;
    EnvelopingElement derivative(Var v) const;
    friend bool operator==(const EnvelopingElement& a, const EnvelopingElement& b) { return a.terms == b.terms; }
};

// Res_w w^{1+m} f'(w) / f(w)^{2+k} for k <= m <= -2.
PolyQ gf_residue(int m, int k);

// G_f up to word level D from its defining differential equations, solved level by level
// with the Euler operator. Throws Error if the defining relations are not met exactly.
EnvelopingElement build_Gf(int D);

// Residual of G_f L_k + sum_l Res_z(z^{-2-l} f(z)^{1+k}) d/df_l G_f over words of level <= D.
EnvelopingElement converse_residual(const EnvelopingElement& g, int k);

// Applies g to a Fock vector (each word right to left), dropping levels above e.max_level.
FockElement<PolyK> apply_enveloping(const EnvelopingElement& g, const FockElement<PolyK>& e, const ScalarK& alpha0);

} // namespace slevir
