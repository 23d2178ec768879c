#pragma once

#include "slevir/sim/loewner.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace slevir {

// Neumaier-compensated running sums of x and x^2.
struct Moments {
    double n = 0;
    double sum = 0, sum_c = 0, sq = 0, sq_c = 0;
    void add(double x);
    double mean() const;
    double variance() const;  // unbiased
    double standard_error() const;
};

// E[g_{-2}] at the first time two points come within eps, for each eps, from one
// set of paths stopped at the smallest eps. The eps -> 0 limit is a least-squares
// fit of a + b eps^2.
struct CapacityReport {
    std::vector<double> eps, means, standard_errors;
    double extrapolated = 0;
    double standard_error = 0;  // of the smallest-eps mean
    double truncated_fraction = 0;  // paths that reached the horizon first
    int rejections = 0;
};
CapacityReport capacity_expectation(SimConfig cfg, std::vector<double> eps);

// E[g_{-2}(tau ^ T)] over growing (paths, horizon) stages. A finite expectation
// levels off; flagged when the means increase at every stage and the last exceeds
// four times the first.
struct IntegrabilityReport {
    std::vector<int> paths;
    std::vector<double> horizons, means, standard_errors;
    bool flagged = false;
};
IntegrabilityReport integrability_check(SimConfig cfg, const std::vector<std::pair<int, double>>& stages);

enum class ObservableForm { Direct, DivideByZ };

// Increments of the observable between consecutive slice times (stopped at tau),
// averaged over paths; pass iff every |z| < 4.
struct DriftReport {
    std::string observable;
    std::vector<double> slice_times, means, standard_errors, z_scores;
    int n_paths = 0;
    double dt = 0;
    double kappa = 0;
    bool pass = false;
    double max_abs_z() const;
};
DriftReport martingale_drift_test(const SimConfig& cfg, const Element& observable, ObservableForm form,
                                  const std::vector<double>& slice_times, const std::string& id = "");

// Value of an Element at a path state; f_m maps to g_m. Throws ChamberError off the chamber.
double evaluate_on_path(const Element& e, const SleVariant& v, const PathState& s, double kappa);

nlohmann::json drift_report_to_json(const DriftReport& r, const std::string& variant);
nlohmann::json capacity_report_to_json(const CapacityReport& r, const SimConfig& cfg, double expected);
nlohmann::json integrability_report_to_json(const IntegrabilityReport& r, double kappa);

} // namespace slevir
