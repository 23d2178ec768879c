#include "slevir/virasoro/residues.hpp"

#include "slevir/algebra/map_series.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace slevir {

namespace {

int checked_depth(int d) {
    d = std::max(2, d);
    if (d > Var::kMaxDepth) throw DepthError("residue needs f-depth " + std::to_string(d));
    return d;
}

template <class Key, class Fn>
PolyQ memo(std::map<Key, PolyQ>& cache, std::mutex& mu, const Key& key, Fn&& compute) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PolyQ v = compute();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

std::mutex g_mu;
std::map<int, PolyQ> g_schwarzian;
std::map<std::pair<int, int>, PolyQ> g_weight, g_translation, g_coefficient;

} // namespace

PolyQ schwarzian_mode(int n) {
    return memo(g_schwarzian, g_mu, n, [&] {
        MapSeries f(checked_depth(-n));
        return f.schwarzian().coeff(n - 2);
    });
}

PolyQ weight_mode(int n, Var x) {
    return memo(g_weight, g_mu, std::make_pair(n, x.slot()), [&] {
        MapSeries f(checked_depth(-n));
        SeriesQ fp = f.derivative();
        return (fp * fp * f.inverse_power_expansion(PolyQ::var(x), 2)).coeff(n - 2);
    });
}

PolyQ translation_mode(int n, Var x) {
    return memo(g_translation, g_mu, std::make_pair(n, x.slot()), [&] {
        MapSeries f(checked_depth(1 - n));
        SeriesQ fp = f.derivative();
        return (fp * fp * f.inverse_power_expansion(PolyQ::var(x), 1)).coeff(n - 2);
    });
}

PolyQ coefficient_mode(int n, int l) {
    if (-l - n < 0) return {};
    return memo(g_coefficient, g_mu, std::make_pair(n, l), [&] {
        MapSeries f(checked_depth(std::max(-2 - l, -l - n)));
        SeriesQ fp2 = f.derivative() * f.derivative();
        PolyQ total;
        for (int m = 0; m <= -2 - l; ++m) {
            PolyQ inner = f.power(-1 - m).coeff(1 + l);
            if (inner.is_zero()) continue;
            total -= inner * (fp2 * f.power(m)).coeff(n - 2);
        }
        return total;
    });
}

} // namespace slevir
