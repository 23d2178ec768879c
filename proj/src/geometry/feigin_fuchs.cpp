#include "slevir/geometry/feigin_fuchs.hpp"

#include "slevir/algebra/errors.hpp"
#include "slevir/geometry/quadrature.hpp"
#include "slevir/util/parallel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace slevir {

namespace {

void check_points(const PairingConfig& p, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != p.N) throw DomainError("expected " + std::to_string(p.N) + " points");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw DomainError("points must be strictly increasing");
    if (!is_valid_config(p)) throw DomainError("invalid pairing configuration");
}

double min_gap(const std::vector<double>& x) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < x.size(); ++i) d = std::min(d, x[i] - x[i - 1]);
    return d;
}

// Gap around point i (0-based) used to scale finite-difference steps.
double local_gap(const std::vector<double>& x, std::size_t i) {
    double d = std::numeric_limits<double>::infinity();
    if (i > 0) d = std::min(d, x[i] - x[i - 1]);
    if (i + 1 < x.size()) d = std::min(d, x[i + 1] - x[i]);
    return std::isfinite(d) ? d : 1.0;
}

double inv_gamma(double z) {
    if (z <= 0 && z == std::floor(z)) return 0.0;
    return 1.0 / std::tgamma(z);
}

} // namespace

double homogeneity_degree(int N, int L, double kappa) {
    return L + (0.25 * N * (N - 1) - N * L + L * (L - 1)) * 4.0 / kappa;
}

double pair_closed_form(double x1, double x2, double kappa) {
    if (!(x2 > x1)) throw DomainError("points must be strictly increasing");
    double a = 1 - 4 / kappa;
    if (a <= 0 && std::abs(a - std::round(a)) < 1e-12) throw PoleError("Beta function pole at kappa = " + std::to_string(kappa));
    double beta = std::tgamma(a) * std::tgamma(a) * inv_gamma(2 * a);
    return std::pow(x2 - x1, (kappa - 6) / kappa) * beta;
}

double feigin_fuchs_Z(const PairingConfig& p, const std::vector<double>& x, double kappa, const QuadratureSpec& spec) {
    check_points(p, x);
    if (!(kappa > 0)) throw DomainError("kappa must be positive");
    const int N = p.N, L = p.L();
    double pre = 1;
    for (int I = 0; I < N; ++I)
        for (int J = I + 1; J < N; ++J) pre *= std::pow(x[J] - x[I], 2 / kappa);
    if (L == 0) return pre;
    if (N == 2 && L == 1 && kappa <= 4) return pair_closed_form(x[0], x[1], kappa);
    if (kappa <= 4) throw DomainError("direct quadrature needs kappa > 4 (endpoint exponent -4/kappa <= -1)");
    if (L > 2) throw DomainError("quadrature supports at most two screening charges");
    if (p.nested()) throw DomainError("nested pairings need contours deformed off the real line");

    const double e = -4 / kappa;
    const GaussRule& rule = cached_gauss_jacobi(spec.nodes, e, e);
    const int n = spec.nodes;

    // Node positions and the part of the integrand that depends on a single w_R.
    std::vector<std::vector<double>> w(L, std::vector<double>(n)), g(L, std::vector<double>(n));
    for (int R = 0; R < L; ++R) {
        int l = p.pairs[R].first - 1, r = p.pairs[R].second - 1;
        double mid = 0.5 * (x[l] + x[r]), half = 0.5 * (x[r] - x[l]);
        pre *= std::pow(half, 1 + 2 * e);
        for (int k = 0; k < n; ++k) {
            double wk = mid + half * rule.nodes[k];
            double v = rule.weights[k];
            for (int I = 0; I < N; ++I)
                if (I != l && I != r) v *= std::pow(std::abs(x[I] - wk), e);
            w[R][k] = wk;
            g[R][k] = v;
        }
    }
    if (L == 1) {
        double s = 0;
        for (int k = 0; k < n; ++k) s += g[0][k];
        return pre * s;
    }
    std::vector<double> partial(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            double s = 0;
            for (int j = 0; j < n; ++j) s += g[1][j] * std::pow(std::abs(w[1][j] - w[0][i]), -2 * e);
            partial[i] = g[0][i] * s;
        },
        spec.threads);
    double s = 0;
    for (double v : partial) s += v;
    return pre * s;
}

NullFieldResidual null_field_residual(const PairingConfig& p, const std::vector<double>& x, double kappa, int I,
                                      const QuadratureSpec& spec) {
    check_points(p, x);
    if (I < 1 || I > p.N) throw DomainError("curve index out of range");
    const std::size_t i = I - 1;
    auto Z = [&](const std::vector<double>& y) { return feigin_fuchs_Z(p, y, kappa, spec); };
    const double z0 = Z(x);
    auto shifted = [&](std::size_t j, double h) {
        auto y = x;
        y[j] += h;
        return Z(y);
    };
    auto d1 = [&](std::size_t j, double h) { return (shifted(j, h) - shifted(j, -h)) / (2 * h); };
    auto d2 = [&](std::size_t j, double h) { return (shifted(j, h) - 2 * z0 + shifted(j, -h)) / (h * h); };

    std::vector<double> terms;
    double hi = spec.fd_step * local_gap(x, i);
    terms.push_back(kappa / 2 * (4 * d2(i, hi / 2) - d2(i, hi)) / 3);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j == i) continue;
        double hj = spec.fd_step * local_gap(x, j);
        double dj = (4 * d1(j, hj / 2) - d1(j, hj)) / 3;
        double gap = x[j] - x[i];
        terms.push_back(2 / gap * dj);
        terms.push_back((kappa - 6) / kappa / (gap * gap) * z0);
    }
    NullFieldResidual out;
    double gap = min_gap(x);
    out.scale = std::abs(z0) / (gap * gap);
    for (double t : terms) {
        out.value += t;
        out.scale += std::abs(t);
    }
    out.residual = std::abs(out.value) / out.scale;
    // The second difference at step hi/2 dominates the rounding error.
    double eps = std::numeric_limits<double>::epsilon();
    out.noise_floor = kappa / 2 * 16 * eps * std::abs(z0) / (hi * hi) / out.scale;
    return out;
}

double scaling_error(const PairingConfig& p, const std::vector<double>& x, double kappa, double lambda,
                     const QuadratureSpec& spec) {
    if (!(lambda > 0)) throw DomainError("scale factor must be positive");
    auto y = x;
    for (double& v : y) v *= lambda;
    double ratio = feigin_fuchs_Z(p, y, kappa, spec) / feigin_fuchs_Z(p, x, kappa, spec);
    return std::abs(ratio / std::pow(lambda, homogeneity_degree(p.N, p.L(), kappa)) - 1);
}

ExponentFit asymptotic_exponent(const PairingConfig& p, const std::vector<double>& x, double kappa, int I,
                                const QuadratureSpec& spec, int steps, double threshold) {
    check_points(p, x);
    if (I < 1 || I >= p.N) throw DomainError("collapse needs adjacent points I, I+1");
    if (steps < 4) throw DomainError("need at least four collapse steps");
    const std::size_t i = I - 1;
    const double r = 0.5;
    ExponentFit fit;
    double d = 0.5 * (x[i + 1] - x[i]);
    for (int k = 0; k < steps; ++k, d *= r) {
        auto y = x;
        y[i + 1] = y[i] + d;
        fit.separations.push_back(d);
        fit.values.push_back(feigin_fuchs_Z(p, y, kappa, spec));
    }
    std::vector<double> local;
    for (int k = 0; k + 1 < steps; ++k)
        local.push_back(std::log(std::abs(fit.values[k + 1] / fit.values[k])) / std::log(r));
    // Corrections are analytic in d, so local slopes approach the limit like d.
    auto extrap = [&](std::size_t k) { return (local[k] - r * local[k - 1]) / (1 - r); };
    std::size_t last = local.size() - 1;
    fit.local_slope = local[last];
    fit.slope = extrap(last);
    fit.fit_residual = std::abs(extrap(last) - extrap(last - 1));
    fit.reliable = fit.fit_residual < threshold;
    return fit;
}

double erased_pair_ratio(const PairingConfig& p, const std::vector<double>& x, double kappa, int I, double d,
                         const QuadratureSpec& spec) {
    check_points(p, x);
    PairingConfig rest = erase_pair(p, I);
    auto y = x;
    y[I] = y[I - 1] + d;
    std::vector<double> z;
    for (int k = 0; k < p.N; ++k)
        if (k != I - 1 && k != I) z.push_back(x[k]);
    double pair = feigin_fuchs_Z(PairingConfig{2, {{1, 2}}}, {y[I - 1], y[I]}, kappa, spec);
    return feigin_fuchs_Z(p, y, kappa, spec) / (pair * feigin_fuchs_Z(rest, z, kappa, spec));
}

} // namespace slevir
