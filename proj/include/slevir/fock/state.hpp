#pragma once

#include "slevir/fock/enveloping.hpp"
#include "slevir/sle/variant.hpp"

#include <vector>

namespace slevir {

struct StateComponent {
    Partition basis;  // a_{-n_1}...a_{-n_k} v_beta
    PolyK value;      // <dual basis vector, G_f U^- v_beta>
};

// Coulomb-gas charges of SLE_kappa(rho): 1/sqrt(kappa) at x, rho_K/(2 sqrt(kappa)) at y_K.
std::vector<std::pair<ScalarK, Var>> kappa_rho_charges(const SleVariant& v);

// Components of G_f U^- v_beta up to level L_max, using G_f to word level D. The v*_beta
// component is normalised to 1. Requires kappa = t^2 (generic).
std::vector<StateComponent> state_components(const SleVariant& v, int L_max, int D);

// Same for arbitrary charges at point variables (used with screening charges).
std::vector<StateComponent> coulomb_state(const std::vector<std::pair<ScalarK, Var>>& charges, int L_max, int D);

// h_{0; alpha_1..}(z) = prod_{i<j} |z_j - z_i|^{2 a_i a_j}, oriented by the chamber.
Element coulomb_product(const std::vector<std::pair<ScalarK, Var>>& charges, const Chamber& chamber);

// (kappa/2) d_x^2 + sum_K (2/(y_K-x) d_{y_K} - 2 h(alpha_K)/(y_K-x)^2) applied to
// h_{0; 1/t, alpha_1..alpha_M}, with chamber x < y_1 < ... < y_M.
Element coulomb_null_field_residual(const std::vector<ScalarK>& alpha_y);

// Multiple SLE with N charges 1/t at x_I and L screening charges -2/t at w_R, chamber as
// given (default x1 < w1 < x2 < w2 < ... then the remaining x). Returns
// D_I h + 2 sum_R d/dw_R (h/(w_R - x_I)).
Element screening_identity(int N, int L, int I, std::vector<Var> order = {});

// For the same setup, max over components of A_I(h * comp) + 2 sum_R d/dw_R(h comp/(w_R-x_I));
// true if every component up to level min(L_max, D) gives zero.
bool multiple_state_total_derivative(int N, int L, int I, int L_max, int D, std::vector<Var> order = {});

} // namespace slevir
