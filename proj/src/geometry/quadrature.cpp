#include "slevir/geometry/quadrature.hpp"

#include "slevir/algebra/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace slevir {

GaussRule gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw DomainError("quadrature needs at least one node");
    if (!(a > -1) || !(b > -1)) throw DomainError("Jacobi exponents must exceed -1");
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
    double ab = a + b;
    for (int k = 0; k < n; ++k) {
        double s = 2.0 * k + ab;
        diag(k) = (k == 0) ? (b - a) / (ab + 2) : (b * b - a * a) / (s * (s + 2));
    }
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + ab;
        double v;
        if (k == 1)  // the general formula is 0/0 when a + b = -1
            v = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
        else
            v = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1) * (s - 1));
        sub(k - 1) = std::sqrt(v);
    }
    GaussRule rule;
    double mu0 = std::exp((ab + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(ab + 2));
    if (n == 1) {
        rule.nodes = {diag(0)};
        rule.weights = {mu0};
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw Error("quadrature", "Jacobi matrix eigen-decomposition failed");
    for (int k = 0; k < n; ++k) {
        double v0 = es.eigenvectors()(0, k);
        rule.nodes.push_back(es.eigenvalues()(k));
        rule.weights.push_back(mu0 * v0 * v0);
    }
    return rule;
}

const GaussRule& cached_gauss_jacobi(int n, double a, double b) {
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, GaussRule> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gauss_jacobi(n, a, b)).first;
    return it->second;
}

} // namespace slevir
