#include "slevir/sim/monte_carlo.hpp"

#include "slevir/algebra/errors.hpp"
#include "slevir/util/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace slevir {

namespace {

void neumaier(double& s, double& c, double x) {
    double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
}

} // namespace

void Moments::add(double x) {
    n += 1;
    neumaier(sum, sum_c, x);
    neumaier(sq, sq_c, x * x);
}

double Moments::mean() const { return n > 0 ? (sum + sum_c) / n : 0; }

double Moments::variance() const {
    if (n < 2) return 0;
    double m = mean();
    return std::max(0.0, ((sq + sq_c) - n * m * m) / (n - 1));
}

double Moments::standard_error() const { return n > 0 ? std::sqrt(variance() / n) : 0; }

CapacityReport capacity_expectation(SimConfig cfg, std::vector<double> eps) {
    if (eps.empty()) throw DomainError("need at least one buffer size");
    std::sort(eps.rbegin(), eps.rend());
    cfg.eps = eps.back();
    const std::size_t E = eps.size();
    std::vector<double> hits(static_cast<std::size_t>(cfg.n_paths) * E);
    std::vector<char> truncated(cfg.n_paths);
    std::vector<int> rejections(cfg.n_paths);
    parallel_for(
        cfg.n_paths,
        [&](std::size_t i) {
            PathIntegrator path(cfg, i);
            std::size_t k = 0;
            while (true) {
                double d = path.gap();
                while (k < E && d <= eps[k]) hits[i * E + k++] = path.state().g[0];
                if (!path.running() || k == E) break;
                path.step();
            }
            // Horizon first (or a discarded crossing step): remaining buffers get the stopped value.
            truncated[i] = path.reason() == StopReason::Horizon;
            for (; k < E; ++k) hits[i * E + k] = path.state().g[0];
            rejections[i] = path.rejections();
        },
        cfg.threads);
    CapacityReport r;
    r.eps = eps;
    std::vector<Moments> m(E);
    for (int i = 0; i < cfg.n_paths; ++i) {
        for (std::size_t k = 0; k < E; ++k) m[k].add(hits[i * E + k]);
        r.truncated_fraction += truncated[i];
        r.rejections += rejections[i];
    }
    r.truncated_fraction /= std::max(1, cfg.n_paths);
    for (auto& mk : m) {
        r.means.push_back(mk.mean());
        r.standard_errors.push_back(mk.standard_error());
    }
    r.standard_error = r.standard_errors.back();
    if (E == 1) {
        r.extrapolated = r.means[0];
    } else {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < E; ++k) {
            double x = eps[k] * eps[k];
            sx += x;
            sy += r.means[k];
            sxx += x * x;
            sxy += x * r.means[k];
        }
        double slope = (E * sxy - sx * sy) / (E * sxx - sx * sx);
        r.extrapolated = (sy - slope * sx) / E;
    }
    return r;
}

IntegrabilityReport integrability_check(SimConfig cfg, const std::vector<std::pair<int, double>>& stages) {
    IntegrabilityReport r;
    for (auto [n, T] : stages) {
        cfg.n_paths = n;
        cfg.horizon = T;
        std::vector<double> g(n);
        parallel_for(
            n,
            [&](std::size_t i) {
                PathIntegrator path(cfg, i);
                while (path.running()) path.step();
                g[i] = path.state().g[0];
            },
            cfg.threads);
        Moments m;
        for (double v : g) m.add(v);
        r.paths.push_back(n);
        r.horizons.push_back(T);
        r.means.push_back(m.mean());
        r.standard_errors.push_back(m.standard_error());
    }
    bool increasing = r.means.size() >= 2;
    for (std::size_t k = 1; k < r.means.size(); ++k) increasing = increasing && r.means[k] > r.means[k - 1];
    r.flagged = increasing && r.means.back() > 4 * r.means.front();
    return r;
}

double evaluate_on_path(const Element& e, const SleVariant& v, const PathState& s, double kappa) {
    auto value = [&](Var var) -> double {
        switch (var.kind()) {
        case Var::Kind::X: return s.x.at(var.index() - 1);
        case Var::Kind::Y: return s.y.at(var.index() - 1);
        case Var::Kind::F: {
            int k = -var.index() - 2;
            if (k >= static_cast<int>(s.g.size())) throw DomainError("observable needs g_" + std::to_string(var.index()) + " beyond K");
            return s.g[k];
        }
        default: throw DomainError("cannot evaluate " + var.name() + " on a path");
        }
    };
    (void)v;
    return e.evaluate(value, std::sqrt(kappa));
}

double DriftReport::max_abs_z() const {
    double z = 0;
    for (double v : z_scores) z = std::max(z, std::abs(v));
    return z;
}

DriftReport martingale_drift_test(const SimConfig& cfg, const Element& observable, ObservableForm form,
                                  const std::vector<double>& slice_times, const std::string& id) {
    if (slice_times.empty() || !std::is_sorted(slice_times.begin(), slice_times.end()) || slice_times.front() <= 0)
        throw DomainError("slice times must be positive and increasing");
    if (observable.f_depth() > cfg.K) throw DomainError("observable depends on coefficients deeper than K");
    SimConfig c = cfg;
    c.horizon = slice_times.back();
    const std::size_t S = slice_times.size();
    auto value = [&](const PathState& s) {
        double m = evaluate_on_path(observable, cfg.variant, s, cfg.kappa);
        if (form == ObservableForm::DivideByZ) m /= evaluate_on_path(cfg.variant.Z, cfg.variant, s, cfg.kappa);
        return m;
    };
    std::vector<double> inc(static_cast<std::size_t>(c.n_paths) * S);
    parallel_for(
        c.n_paths,
        [&](std::size_t i) {
            PathIntegrator path(c, i);
            double prev = value(path.state());
            for (std::size_t k = 0; k < S; ++k) {
                while (path.running() && path.state().t < slice_times[k]) path.step(slice_times[k] - path.state().t);
                double now = value(path.state());
                inc[i * S + k] = now - prev;
                prev = now;
            }
        },
        c.threads);
    DriftReport r;
    r.observable = id.empty() ? observable.to_string() : id;
    r.slice_times = slice_times;
    r.n_paths = c.n_paths;
    r.dt = c.dt;
    r.kappa = c.kappa;
    r.pass = true;
    for (std::size_t k = 0; k < S; ++k) {
        Moments m;
        for (int i = 0; i < c.n_paths; ++i) m.add(inc[i * S + k]);
        double se = m.standard_error();
        double z = se > 0 ? m.mean() / se : (m.mean() == 0 ? 0 : INFINITY);
        r.means.push_back(m.mean());
        r.standard_errors.push_back(se);
        r.z_scores.push_back(z);
        if (!(std::abs(z) < 4)) r.pass = false;
    }
    return r;
}

nlohmann::json drift_report_to_json(const DriftReport& r, const std::string& variant) {
    return {{"schema", "slevir.drift.v1"}, {"variant", variant},   {"kappa", r.kappa},
            {"observable", r.observable},  {"n_paths", r.n_paths}, {"dt", r.dt},
            {"slice_times", r.slice_times}, {"means", r.means},     {"standard_errors", r.standard_errors},
            {"z_scores", r.z_scores},      {"pass", r.pass}};
}

nlohmann::json capacity_report_to_json(const CapacityReport& r, const SimConfig& cfg, double expected) {
    return {{"schema", "slevir.capacity.v1"},
            {"kappa", cfg.kappa},
            {"n_paths", cfg.n_paths},
            {"dt", cfg.dt},
            {"horizon", cfg.horizon},
            {"eps", r.eps},
            {"means", r.means},
            {"standard_errors", r.standard_errors},
            {"extrapolated", r.extrapolated},
            {"expected", expected},
            {"relative_error", std::abs(r.extrapolated / expected - 1)},
            {"truncated_fraction", r.truncated_fraction},
            {"rejections", r.rejections}};
}

nlohmann::json integrability_report_to_json(const IntegrabilityReport& r, double kappa) {
    return {{"schema", "slevir.integrability.v1"}, {"kappa", kappa},       {"paths", r.paths},
            {"horizons", r.horizons},              {"means", r.means},     {"standard_errors", r.standard_errors},
            {"flagged", r.flagged}};
}

} // namespace slevir
