#pragma once

#include "slevir/funcspace/element.hpp"
#include "slevir/virasoro/operators.hpp"

#include <random>
#include <string>
#include <vector>

namespace slevir {

enum class VariantKind { Chordal, KappaRho, Multiple };

std::string to_string(VariantKind k);

// Curves start at x_1..x_N, passive points are y_1..y_M. Indices below are 1-based.
struct SleVariant {
    VariantKind kind = VariantKind::Chordal;
    int N = 1, M = 0;
    ScalarK kappa;
    std::vector<ScalarK> kappa_curve;  // kappa_I, each kappa or 16/kappa
    std::vector<ScalarK> h_y;
    std::vector<ScalarK> rho;          // SLE_kappa(rho) only
    Chamber chamber;
    Element Z;
    ScalarK Delta;

    Var x(int I) const { return Var::x(I); }
    Var y(int K) const { return Var::y(K); }
    ScalarK h_x(int I) const;
    ScalarK central_charge() const;
    // delta = h for every point, c = c(kappa).
    WeightAssignment weights() const;
};

// Z = 1.
SleVariant make_chordal(const ScalarK& kappa = ScalarK::kappa());
// Z = prod_K |y_K - x|^{rho_K/kappa} prod_{J<K} |y_J - y_K|^{rho_J rho_K/(2 kappa)}.
// `order` lists x_1 and y_1..y_M left to right; default is x_1 < y_1 < ... < y_M.
SleVariant make_kappa_rho(const std::vector<ScalarK>& rho, const ScalarK& kappa = ScalarK::kappa(),
                          std::vector<Var> order = {});
// N curves with all kappa_I = kappa and Z = prod_{I<J} (x_J - x_I)^{exponent}.
SleVariant make_multiple(int N, const ScalarK& exponent, const ScalarK& kappa = ScalarK::kappa());
// Any Z on x_1..x_N; kappa_curve defaults to kappa for every curve.
SleVariant make_custom(int N, std::vector<ScalarK> h_y, Element Z, Chamber chamber,
                       const ScalarK& kappa = ScalarK::kappa(), std::vector<ScalarK> kappa_curve = {});

// Null-field operator D_I applied to e.
Element null_field(const SleVariant& v, int I, const Element& e);
// p_m(f_{-1}, f_{-2}, ...) for m <= -2 from the recursion, with f_{-1} given.
PolyQ p_poly(int m, const PolyQ& f_minus_1);
// A_I e = D_I e + 2 sum_m p_m(-x_I, f) d/df_m e.
Element apply_A(const SleVariant& v, int I, const Element& e);
// q_n(x_I; f) in [L_n, A_I] = q_n A_I.
PolyQ q_poly(int n, Var x);

struct VariantChecks {
    std::vector<bool> null_field;  // D_I Z == 0, per curve
    bool translation_invariant = false;
    bool homogeneous = false;
};
VariantChecks check_variant(const SleVariant& v);
// Z > 0 at `samples` random chamber points for the given kappa value.
bool positivity_sampled(const SleVariant& v, double kappa_value, int samples, std::mt19937_64& rng);

} // namespace slevir
