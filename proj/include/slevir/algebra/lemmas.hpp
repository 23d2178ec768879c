#pragma once

#include "slevir/algebra/map_series.hpp"

#include <optional>
#include <random>

namespace slevir {

enum class LemmaCase { A1a, A1b, A1c, A2 };

const char* lemma_case_name(LemmaCase c);

struct LemmaInputs {
    int depth = 6;
    int p = 1;
    // Unset means the symbol r (resp. s) is kept symbolic.
    std::optional<Rational> r, s;
    // Specialize f to the identity map after differentiating.
    bool identity_map = false;

    static LemmaInputs random(std::mt19937_64& rng);
};

// LHS - RHS of one of the change-of-expansion identities. A1c lives in two
// indeterminates: the outer series is in w, its coefficients are series in z.
struct LemmaResidual {
    LemmaCase which;
    std::optional<SeriesQ> single;
    std::optional<LaurentSeries<SeriesQ>> nested;
    // Number of coefficients inside the guaranteed window that were compared.
    int checked = 0;
    bool vanishes = false;
};

LemmaResidual lemma_identity_residual(LemmaCase which, const LemmaInputs& in);

// Res_v v^{-2-m} (1/(f(v) - x)) in |f(v)| > |x|, read off the expansion.
PolyQ residue_p(const MapSeries& f, const PolyQ& x, int m);

} // namespace slevir
