#pragma once

#include "slevir/geometry/pairing.hpp"

#include <vector>

namespace slevir {

// Screening integrals for pure geometries. Each w_R runs along the real segment
// from the left endpoint of the R-th pair to its right endpoint; the endpoint
// singularities (x - w)^{-4/kappa} are absorbed into a Gauss-Jacobi weight.
struct QuadratureSpec {
    int nodes = 48;           // per screening variable
    unsigned threads = 0;     // 0: SLEVIR_THREADS / hardware
    double fd_step = 1e-3;    // relative to the local point spacing
};

// Delta = L + (N(N-1)/4 - N L + L(L-1)) alpha_-^2 with alpha_-^2 = 4/kappa.
double homogeneity_degree(int N, int L, double kappa);

// (x2 - x1)^{(kappa-6)/kappa} B(1 - 4/kappa, 1 - 4/kappa), continued in kappa via Gamma.
// Throws PoleError where 1 - 4/kappa is a non-positive integer.
double pair_closed_form(double x1, double x2, double kappa);

// Z^(p)(points). Needs strictly increasing points, L <= 2 and no nested pairs.
// kappa <= 4 is accepted only for N = 2, L = 1 (closed form) and for L = 0.
double feigin_fuchs_Z(const PairingConfig& p, const std::vector<double>& points, double kappa,
                      const QuadratureSpec& spec = {});

struct NullFieldResidual {
    double residual = 0;     // |D_I Z| / scale
    double value = 0;        // D_I Z
    double scale = 0;        // sum of |terms| + |Z| / d_min^2
    double noise_floor = 0;  // roundoff estimate of the residual at this step size
};

// D_I Z^(p) by central differences with one Richardson step, I 1-based.
NullFieldResidual null_field_residual(const PairingConfig& p, const std::vector<double>& points, double kappa,
                                      int I, const QuadratureSpec& spec = {});

// |Z(lambda x) / Z(x) / lambda^Delta - 1|
double scaling_error(const PairingConfig& p, const std::vector<double>& points, double kappa, double lambda,
                     const QuadratureSpec& spec = {});

struct ExponentFit {
    double slope = 0;         // extrapolated d -> 0 slope of log Z against log d
    double local_slope = 0;   // slope on the two smallest separations
    double fit_residual = 0;  // spread of the last two extrapolations
    bool reliable = false;    // fit_residual below the threshold
    std::vector<double> separations, values;
};

// Moves x_{I+1} towards x_I geometrically (ratio 1/2, `steps` points, starting
// from half the current gap) and fits the log-log slope.
ExponentFit asymptotic_exponent(const PairingConfig& p, const std::vector<double>& points, double kappa, int I,
                                const QuadratureSpec& spec = {}, int steps = 16, double threshold = 1e-4);

// Z^(p) / (Z_pair(x_I, x_I + d) Z^(p')) with x_{I+1} = x_I + d and p' = p minus the pair (I, I+1).
// Tends to 1 as d -> 0.
double erased_pair_ratio(const PairingConfig& p, const std::vector<double>& points, double kappa, int I, double d,
                         const QuadratureSpec& spec = {});

} // namespace slevir
