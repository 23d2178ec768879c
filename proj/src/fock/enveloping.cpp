#include "slevir/fock/enveloping.hpp"

#include "slevir/algebra/map_series.hpp"

#include <mutex>

namespace slevir {

std::map<VirWord, Rational> straighten(const VirWord& w) {
    static std::mutex mu;
    static std::map<VirWord, std::map<VirWord, Rational>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    std::map<VirWord, Rational> out;
    size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
        out[w] = 1;
    } else {
        const int a = w[i], b = w[i + 1];
        VirWord swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        for (const auto& [u, c] : straighten(swapped)) out[u] += c;
        VirWord merged(w.begin(), w.begin() + long(i));
        merged.push_back(a + b);
        merged.insert(merged.end(), w.begin() + long(i) + 2, w.end());
        for (const auto& [u, c] : straighten(merged)) out[u] += c * (a - b);
        for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, out);
    return out;
}

void EnvelopingElement::add(const VirWord& w, const PolyQ& c) {
    if (c.is_zero() || word_level(w) > degree) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

EnvelopingElement EnvelopingElement::times_L(int k) const {
    EnvelopingElement r{degree, {}};
    for (const auto& [w, c] : terms) {
        if (word_level(w) - k > degree) continue;
        VirWord u = w;
        u.push_back(k);
        for (const auto& [v, a] : straighten(u)) r.add(v, c.scaled(a));
    }
    return r;
}

EnvelopingElement EnvelopingElement::derivative(Var v) const {
    EnvelopingElement r{degree, {}};
    for (const auto& [w, c] : terms) r.add(w, c.derivative(v));
    return r;
}

PolyQ gf_residue(int m, int k) {
    MapSeries f(std::max(2, m - k));
    return (f.derivative() * f.power(-2 - k)).coeff(-2 - m);
}

namespace {

// -sum_{k <= m} R_{m,k} G L_k, restricted to words of level `level`.
EnvelopingElement defining_rhs(const EnvelopingElement& g, int m, int level) {
    EnvelopingElement r{g.degree, {}};
    for (int k = m; -k <= level; --k) {
        PolyQ rk = gf_residue(m, k);
        if (rk.is_zero()) continue;
        EnvelopingElement gl = g.times_L(k);
        for (const auto& [w, c] : gl.terms)
            if (word_level(w) == level) r.add(w, -(rk * c));
    }
    return r;
}

EnvelopingElement level_part(const EnvelopingElement& g, int level) {
    EnvelopingElement r{g.degree, {}};
    for (const auto& [w, c] : g.terms)
        if (word_level(w) == level) r.add(w, c);
    return r;
}

} // namespace

EnvelopingElement build_Gf(int D) {
    if (D > Var::kMaxDepth) throw DepthError("G_f degree beyond f-depth");
    EnvelopingElement g{D, {}};
    g.add({}, PolyQ(Rational(1)));
    for (int d = 2; d <= D; ++d) {
        // Euler: d * G_d = sum_m (-m) f_m dG_d/df_m
        EnvelopingElement next{D, {}};
        for (int m = -2; m >= -d; --m) {
            PolyQ fm = PolyQ::var(Var::f(m)).scaled(ratio(-m, d));
            for (const auto& [w, c] : defining_rhs(g, m, d).terms) next.add(w, fm * c);
        }
        for (const auto& [w, c] : next.terms) g.add(w, c);
        for (int m = -2; m >= -d; --m) {
            if (!(level_part(g.derivative(Var::f(m)), d) == defining_rhs(g, m, d)))
                throw Error("inconsistent", "G_f defining relation fails at level " + std::to_string(d));
        }
    }
    return g;
}

EnvelopingElement converse_residual(const EnvelopingElement& g, int k) {
    EnvelopingElement r = g.times_L(k);
    for (int l = -2; l >= -g.degree; --l) {
        MapSeries f(std::max(2, k - l));
        PolyQ coef = f.power(1 + k).coeff(1 + l);
        if (coef.is_zero()) continue;
        for (const auto& [w, c] : g.derivative(Var::f(l)).terms) r.add(w, coef * c);
    }
    return r;
}

FockElement<PolyK> apply_enveloping(const EnvelopingElement& g, const FockElement<PolyK>& e, const ScalarK& alpha0) {
    FockElement<PolyK> out{e.charge, e.max_level, {}};
    for (const auto& [w, c] : g.terms) {
        if (word_level(w) > e.max_level) continue;
        FockElement<PolyK> v = e;
        for (auto it = w.rbegin(); it != w.rend() && !v.is_zero(); ++it) v = fock_virasoro(*it, v, alpha0, false);
        out += v.times(to_polyk(c));
    }
    return out;
}

} // namespace slevir
