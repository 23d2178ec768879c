#pragma once

#include "slevir/funcspace/element.hpp"

#include <random>

namespace slevir {

struct RandomElementSpec {
    std::vector<Var> points;  // in chamber order
    int f_degree = 4;         // bound on the weighted degree of the f-part of each monomial
    int point_degree = 3;
    int max_terms = 4;
    bool prefactors = true;
    // Coefficients and exponents stay functions of kappa, so kappa specializations work.
    bool even_only = true;
};

ScalarK random_scalar(std::mt19937_64& rng, bool even_only = true);
PolyK random_polynomial(std::mt19937_64& rng, const RandomElementSpec& spec);
Element random_element(std::mt19937_64& rng, const RandomElementSpec& spec);

} // namespace slevir
