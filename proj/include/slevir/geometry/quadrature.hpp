#pragma once

#include <vector>

namespace slevir {

struct GaussRule {
    std::vector<double> nodes;    // in (-1, 1), increasing
    std::vector<double> weights;
};

// Gauss-Jacobi rule for weight (1 - s)^a (1 + s)^b on [-1, 1], a, b > -1,
// from the eigen-decomposition of the Jacobi matrix (Golub-Welsch).
GaussRule gauss_jacobi(int n, double a, double b);

// Memoized gauss_jacobi; safe to call from several threads.
const GaussRule& cached_gauss_jacobi(int n, double a, double b);

} // namespace slevir
