#include "slevir/sim/loewner.hpp"

#include "slevir/algebra/errors.hpp"

#include <cmath>

namespace slevir {

std::string to_string(StopReason r) {
    switch (r) {
    case StopReason::Running: return "running";
    case StopReason::Buffer: return "buffer";
    case StopReason::Horizon: return "horizon";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

void loewner_p(double X, const std::vector<double>& g, std::vector<double>& p) {
    const int K = static_cast<int>(g.size()) + 1;
    p.assign(K + 1, 0.0);
    if (K < 2) return;
    p[2] = 1;
    for (int k = 3; k <= K; ++k) {
        double s = -X * p[k - 1];
        for (int j = 2; j <= k - 2; ++j) s += g[j - 2] * p[k - j];
        p[k] = -s;
    }
}

void validate(const SimConfig& cfg) {
    const auto& v = cfg.variant;
    if (!(cfg.dt > 0)) throw DomainError("dt must be positive");
    if (!(cfg.eps > 0)) throw DomainError("eps must be positive");
    if (!(cfg.kappa > 0)) throw DomainError("kappa must be positive");
    if (!(cfg.horizon > 0)) throw DomainError("horizon must be positive");
    if (cfg.K < 2) throw DomainError("need K >= 2");
    if (static_cast<int>(cfg.x0.size()) != v.N || static_cast<int>(cfg.y0.size()) != v.M)
        throw DomainError("initial points do not match the variant");
    if (!v.Z.is_monomial_prefactor()) throw DomainError("simulation needs Z to be a product of powers");
}

PathIntegrator::PathIntegrator(const SimConfig& cfg, std::uint64_t index)
    : cfg_(cfg), rng_(path_seed(cfg.seed, index)) {
    validate(cfg);
    const auto& v = cfg.variant;
    const double t = std::sqrt(cfg.kappa);
    state_.x = cfg.x0;
    state_.y = cfg.y0;
    state_.g.assign(cfg.K - 1, 0.0);
    for (int I = 0; I < v.N; ++I)
        kappa_curve_.push_back(v.kappa_curve.empty() ? cfg.kappa : v.kappa_curve[I].eval(t));
    auto slot = [&](Var var) {
        if (var.kind() == Var::Kind::X) return var.index() - 1;
        if (var.kind() == Var::Kind::Y) return v.N + var.index() - 1;
        throw DomainError("unexpected variable in Z: " + var.name());
    };
    auto blocks = v.Z.blocks();
    for (const auto& [key, e] : blocks.front().pre) log_terms_.push_back({slot(key.lo), slot(key.hi), e.eval(t)});
    for (Var var : v.chamber.order()) order_.push_back(slot(var));
    if (order_.empty())
        for (int I = 0; I < v.N + v.M; ++I) order_.push_back(I);
    gap0_ = gap_of(state_);
    if (!(gap0_ > 0)) throw DomainError("initial points are not strictly ordered in the chamber");
    if (!std::isfinite(gap0_)) gap0_ = 1;
    if (gap0_ <= cfg.eps) throw DomainError("initial points already inside the buffer");
}

double PathIntegrator::gap_of(const PathState& s) const {
    const int N = cfg_.variant.N;
    auto val = [&](int k) { return k < N ? s.x[k] : s.y[k - N]; };
    double d = INFINITY;
    for (std::size_t i = 1; i < order_.size(); ++i) d = std::min(d, val(order_[i]) - val(order_[i - 1]));
    return d;
}

double PathIntegrator::log_z_derivative(int I) const {
    const int N = cfg_.variant.N;
    auto val = [&](int k) { return k < N ? state_.x[k] : state_.y[k - N]; };
    double s = 0;
    for (const auto& lt : log_terms_) {
        if (lt.hi == I) s += lt.e / (val(lt.hi) - val(lt.lo));
        if (lt.lo == I) s -= lt.e / (val(lt.hi) - val(lt.lo));
    }
    return s;
}

void PathIntegrator::step(double h_max) {
    if (!running()) return;
    const int N = cfg_.variant.N, M = cfg_.variant.M;
    double h = cfg_.dt;
    double d = gap();
    if (cfg_.adaptive && std::isfinite(d)) h *= (d / gap0_) * (d / gap0_);
    h = std::min({h, h_max, cfg_.horizon - state_.t});
    if (!(h > 0)) {
        reason_ = StopReason::Horizon;
        return;
    }
    drift_.assign(N, 0.0);
    for (int I = 0; I < N; ++I) {
        double a = kappa_curve_[I] * log_z_derivative(I);
        for (int J = 0; J < N; ++J)
            if (J != I) a += 2 / (state_.x[I] - state_.x[J]);
        drift_[I] = a;
    }
    // Blow-up guard: halve until every drift increment is within 10 noise scales.
    for (int I = 0; I < N; ++I)
        while (std::abs(drift_[I] * h) > 10 * std::sqrt(kappa_curve_[I] * h) && h > 1e-300) {
            h /= 2;
            ++rejections_;
        }

    PathState next = state_;
    next.t += h;
    for (int I = 0; I < N; ++I) next.x[I] += drift_[I] * h + std::sqrt(kappa_curve_[I] * h) * normal_(rng_);
    for (int K = 0; K < M; ++K)
        for (int J = 0; J < N; ++J) next.y[K] += 2 / (state_.y[K] - state_.x[J]) * h;
    for (int J = 0; J < N; ++J) {
        loewner_p(state_.x[J], state_.g, p_);
        for (std::size_t k = 0; k < next.g.size(); ++k) next.g[k] += 2 * p_[k + 2] * h;
    }
    double nd = gap_of(next);
    if (nd <= 0) {
        reason_ = StopReason::Buffer;
        return;
    }
    state_ = std::move(next);
    if (nd <= cfg_.eps)
        reason_ = StopReason::Buffer;
    else if (state_.t >= cfg_.horizon)
        reason_ = StopReason::Horizon;
}

PathRecord simulate_path(const SimConfig& cfg, std::uint64_t index, double record_interval) {
    PathIntegrator path(cfg, index);
    PathRecord rec;
    auto push = [&] {
        const auto& s = path.state();
        rec.times.push_back(s.t);
        rec.x.push_back(s.x);
        rec.y.push_back(s.y);
        rec.g.push_back(s.g);
    };
    push();
    double next_record = record_interval;
    while (path.running()) {
        path.step(record_interval > 0 ? next_record - path.state().t : 1e300);
        if (record_interval <= 0 || path.state().t >= next_record - 1e-12 * record_interval || !path.running()) {
            if (rec.times.back() != path.state().t) push();
            while (record_interval > 0 && next_record <= path.state().t + 1e-12 * record_interval) next_record += record_interval;
        }
    }
    rec.reason = path.reason();
    rec.stop_time = path.state().t;
    rec.rejections = path.rejections();
    return rec;
}

} // namespace slevir
