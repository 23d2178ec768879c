#include "slevir/sle/linear_algebra.hpp"

#include <set>

namespace slevir {

namespace {

struct ClassKey {
    PairKey pair;
    ScalarK rep;  // exponent mod Z; zero for integer exponents
    friend bool operator<(const ClassKey& a, const ClassKey& b) {
        if (a.pair < b.pair) return true;
        if (b.pair < a.pair) return false;
        return a.rep < b.rep;
    }
};

using Signature = std::set<ClassKey>;

Signature signature_of(const Prefactor& pre) {
    Signature s;
    for (const auto& [k, e] : pre)
        if (!e.integer_value()) s.insert({k, e - ScalarK(e.integer_offset())});
    return s;
}

} // namespace

std::vector<SparseVector> element_coordinates(const std::vector<std::vector<Element>>& tuples) {
    // Minimal exponent of each pair within each signature group, over all Elements.
    std::map<Signature, std::map<PairKey, ScalarK>> lowest;
    for (const auto& tuple : tuples)
        for (const auto& e : tuple)
            for (const auto& b : e.blocks()) {
                auto& low = lowest[signature_of(b.pre)];
                for (const auto& [k, x] : b.pre) {
                    // integer exponents are negative here; blocks without the pair count as 0
                    ScalarK cand = x;
                    if (x.integer_value() && *x.integer_value() > 0) cand = ScalarK(0);
                    auto it = low.find(k);
                    if (it == low.end()) {
                        low.emplace(k, cand);
                    } else if (*(cand - it->second).constant_value() < 0) {
                        it->second = cand;
                    }
                }
            }

    std::map<std::tuple<size_t, Signature, Monomial>, size_t> ids;
    std::vector<SparseVector> out;
    for (const auto& tuple : tuples) {
        SparseVector v;
        for (size_t slot = 0; slot < tuple.size(); ++slot)
            for (const auto& b : tuple[slot].blocks()) {
                Signature sig = signature_of(b.pre);
                const auto& low = lowest[sig];
                PolyK poly = b.poly;
                for (const auto& [k, base] : low) {
                    auto it = b.pre.find(k);
                    ScalarK x = it == b.pre.end() ? ScalarK(0) : it->second;
                    long shift = *(x - base).integer_value();
                    poly = poly * difference_power(k.hi, k.lo, int(shift));
                }
                for (const auto& [m, c] : poly.terms()) {
                    auto key = std::make_tuple(slot, sig, m);
                    auto it = ids.find(key);
                    size_t id = it != ids.end() ? it->second : ids.emplace(key, ids.size()).first->second;
                    ScalarK& dst = v[id];
                    dst += c;
                    if (dst.is_zero()) v.erase(id);
                }
            }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::map<size_t, ScalarK>> Echelon::insert(SparseVector v, size_t index) {
    std::map<size_t, ScalarK> comb{{index, ScalarK(1)}};
    auto axpy = [](auto& dst, const auto& src, const ScalarK& a) {
        for (const auto& [k, x] : src) {
            ScalarK& d = dst[k];
            d -= a * x;
            if (d.is_zero()) dst.erase(k);
        }
    };
    for (const auto& [p, row] : rows_) {
        auto it = v.find(p);
        if (it == v.end()) continue;
        ScalarK a = it->second;
        axpy(v, row.v, a);
        axpy(comb, row.comb, a);
    }
    if (v.empty()) return comb;
    size_t pivot = v.begin()->first;
    ScalarK inv = v.begin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    for (auto& [k, x] : comb) x *= inv;
    for (auto& [p, row] : rows_) {
        auto it = row.v.find(pivot);
        if (it == row.v.end()) continue;
        ScalarK a = it->second;
        axpy(row.v, v, a);
        axpy(row.comb, comb, a);
    }
    rows_.emplace(pivot, Row{std::move(v), std::move(comb)});
    return std::nullopt;
}

size_t rank(const std::vector<SparseVector>& columns) {
    Echelon e;
    for (size_t i = 0; i < columns.size(); ++i) e.insert(columns[i], i);
    return e.rank();
}

std::vector<std::vector<ScalarK>> kernel(const std::vector<SparseVector>& columns) {
    Echelon e;
    std::vector<std::vector<ScalarK>> out;
    for (size_t i = 0; i < columns.size(); ++i) {
        auto dep = e.insert(columns[i], i);
        if (!dep) continue;
        std::vector<ScalarK> a(columns.size());
        for (const auto& [k, x] : *dep) a[k] = x;
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace slevir
