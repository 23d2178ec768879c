#pragma once

#include "slevir/algebra/polynomial.hpp"

namespace slevir {

// Residue coefficients of the function-space Virasoro operators, as exact polynomials
// in the f_m (and one point variable). Each is computed once from truncated series whose
// depth is chosen so that the requested coefficient lies inside the guaranteed window.

// Res_u u^{1-n} Sf(u)
PolyQ schwarzian_mode(int n);
// Res_u u^{1-n} f'(u)^2 (1/(f(u)-x)^2)        (multiplies delta_x)
PolyQ weight_mode(int n, Var x);
// Res_u u^{1-n} f'(u)^2 (1/(f(u)-x))          (coefficient of d/dx)
PolyQ translation_mode(int n, Var x);
// -Res_u u^{1-n} f'(u)^2 Res_z z^{-2-l} (1/(f(z)-f(u)))   (coefficient of d/df_l)
PolyQ coefficient_mode(int n, int l);

} // namespace slevir
