#pragma once

#include "slevir/sle/variant.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slevir {

using OperatorWord = std::vector<int>;

// Words L_{-n_1} ... L_{-n_k} with n_1 >= ... >= n_k >= 1 and sum n_i = level, in
// lexicographic order of the integer vectors (so (-2) precedes (-1,-1)).
std::vector<OperatorWord> pbw_words(int level);

struct ModuleLevel {
    int level = 0;
    std::vector<OperatorWord> words;     // representatives of a basis
    std::vector<Element> elements;       // word applied to the generator
    std::vector<OperatorWord> all_words;
    size_t dimension() const { return elements.size(); }
};

struct ModuleBasis {
    Element generator;
    std::vector<ModuleLevel> levels;
    bool annihilated = false;  // every basis element lies in all ker A_I (when checked)
    std::vector<size_t> graded_dimensions() const;
};

// U(vir) applied to `generator` level by level. With check_drift, verifies A_I-annihilation.
ModuleBasis build_module(const SleVariant& v, int max_level, bool check_drift = true);
ModuleBasis build_module_from(const SleVariant& v, const Element& generator, int max_level,
                              bool check_drift = true);

struct NullVector {
    std::vector<std::pair<OperatorWord, ScalarK>> combination;
};

struct SingularNullReport {
    int level = 0;
    std::string kappa;                    // "generic" or the value
    size_t words = 0;
    size_t dimension = 0;                 // rank of the word images at this kappa
    size_t generic_dimension = 0;
    std::vector<OperatorWord> zero_words; // words whose image vanishes
    std::vector<NullVector> null_vectors; // kernel basis of word -> Element
    std::vector<Element> singular_vectors; // nonzero, killed by L_1 and L_2
};

// The variant is rebuilt with kappa -> kappa0 when given. `rebuild` makes the specialized
// variant from a kappa value (e.g. [](ScalarK k) { return make_kappa_rho({k - 6}, k); }).
SingularNullReport find_singular_null(const std::function<SleVariant(const ScalarK&)>& rebuild, int level,
                                      std::optional<Rational> kappa0);

struct MobiusReport {
    Element translation, dilatation, special_conformal;  // residuals
    bool translation_ok() const { return translation.is_zero(); }
    bool dilatation_ok() const { return dilatation.is_zero(); }
    bool special_conformal_ok() const { return special_conformal.is_zero(); }
};
// sum_v (v^{1+n} d/dv + (1+n) delta_v v^n) Z for n = -1, 0, 1.
MobiusReport mobius_covariance_check(const SleVariant& v);

} // namespace slevir
