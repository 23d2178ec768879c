#pragma once

#include "slevir/funcspace/element.hpp"

#include <map>
#include <vector>

namespace slevir {

// delta for each point variable and the central charge c. Any values are allowed here.
struct WeightAssignment {
    std::map<Var, ScalarK> delta;
    ScalarK c;
};

// mult + sum_v field[v] d/dv
struct FirstOrderOperator {
    PolyK mult;
    std::map<Var, PolyQ> field;

    Element apply(const Element& e) const;
    // Vector-field part only, applied to e.
    Element derivation(const Element& e) const;
};

// Operator for L_n acting on elements of f-depth at most `depth`, from residues.
FirstOrderOperator L_residue(int n, const WeightAssignment& w, int depth);
// Same from the closed forms valid for n >= -2.
FirstOrderOperator L_closed_form(int n, const WeightAssignment& w, int depth);

Element apply_L_general(int n, const WeightAssignment& w, const Element& e);
Element apply_L_explicit(int n, const WeightAssignment& w, const Element& e);

// Word (n_k, ..., n_1) means L_{n_k} ... L_{n_1}; the rightmost acts first.
Element apply_word(const std::vector<int>& word, const WeightAssignment& w, const Element& e);

// ([L_n, L_m] - (n-m) L_{n+m} - (c/12)(n^3-n) delta_{n+m,0}) e
Element commutator_residual(int n, int m, const WeightAssignment& w, const Element& e);

// L^_n phi = L_n(Z phi)/Z, by dividing out and by the Z-dependent formula
// L_n phi + phi * sum_v field_v d_v log Z. Z must be a pure prefactor.
Element apply_L_hat(int n, const WeightAssignment& w, const Element& z, const Element& phi);
Element apply_L_hat_formula(int n, const WeightAssignment& w, const Element& z, const Element& phi);

} // namespace slevir
