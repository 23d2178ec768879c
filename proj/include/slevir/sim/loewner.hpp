#pragma once

#include "slevir/sle/variant.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace slevir {

// Euler-Maruyama for the driving processes, passive points and Loewner
// coefficients g_{-2}..g_{-K}, with every curve grown at unit capacity speed.
struct SimConfig {
    SleVariant variant;
    double kappa = 2;
    std::vector<double> x0, y0;  // initial points, in the variant's chamber order
    double dt = 1e-3;            // step at the initial spacing
    bool adaptive = true;        // step = dt * (gap / gap0)^2 when there are two or more points
    int K = 8;                   // deepest coefficient g_{-K}
    double eps = 1e-2;           // stop once two points are this close
    double horizon = 10;
    int n_paths = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

enum class StopReason { Running, Buffer, Horizon };
std::string to_string(StopReason r);

struct PathState {
    double t = 0;
    std::vector<double> x, y;
    std::vector<double> g;  // g[k] = g_{-(k+2)}
    double coefficient(int m) const { return g.at(-m - 2); }  // m <= -2
};

struct PathRecord {
    std::vector<double> times;
    std::vector<std::vector<double>> x, y, g;
    StopReason reason = StopReason::Running;
    double stop_time = 0;
    int rejections = 0;  // blow-up guard halvings
};

// Seed of path i: splitmix64(seed ^ splitmix64(i)).
std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index);

// p_k(c) for k = 2..K, where 1/(g(z) - X) = sum_k p_k z^{1-k}; c_1 = -X, c_j = g_{-j}.
void loewner_p(double X, const std::vector<double>& g, std::vector<double>& p);

class PathIntegrator {
public:
    PathIntegrator(const SimConfig& cfg, std::uint64_t index);

    const PathState& state() const { return state_; }
    // Smallest gap between neighbours in chamber order (negative if the order broke).
    double gap() const { return gap_of(state_); }
    StopReason reason() const { return reason_; }
    bool running() const { return reason_ == StopReason::Running; }
    int rejections() const { return rejections_; }
    // One step of length at most h_max (clipped at the horizon). A step that would
    // cross two points is discarded and the path stops at the previous state.
    void step(double h_max = 1e300);
    // d log Z / d x_I at the current state, I 0-based.
    double log_z_derivative(int I) const;

private:
    double gap_of(const PathState& s) const;

    const SimConfig& cfg_;
    PathState state_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
    StopReason reason_ = StopReason::Running;
    int rejections_ = 0;
    double gap0_ = 1;
    std::vector<double> kappa_curve_;
    struct LogTerm {
        int lo, hi;  // slots: 0..N-1 curves, N.. passive points
        double e;
    };
    std::vector<LogTerm> log_terms_;
    std::vector<int> order_;  // chamber order as slots
    std::vector<double> p_, drift_, next_;
};

// Runs path `index` to its stop, recording every `record_interval` of time (0: every step).
PathRecord simulate_path(const SimConfig& cfg, std::uint64_t index, double record_interval = 0);

// Sanity checks on a configuration; throws DomainError.
void validate(const SimConfig& cfg);

} // namespace slevir
