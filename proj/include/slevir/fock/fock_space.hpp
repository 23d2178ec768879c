#pragma once

#include "slevir/funcspace/element.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace slevir {

struct LevelOverflow : Error {
    explicit LevelOverflow(const std::string& what) : Error("level_overflow", what) {}
};

// n_1 <= ... <= n_k, standing for a_{-n_1} ... a_{-n_k} v_alpha.
using Partition = std::vector<int>;

inline int level_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
// All partitions of `level`, each sorted ascending.
std::vector<Partition> partitions_of(int level);

namespace fock_detail {
inline bool is_zero(const ScalarK& c) { return c.is_zero(); }
inline bool is_zero(const PolyK& c) { return c.is_zero(); }
inline bool is_zero(const Element& c) { return c.is_zero(); }
inline ScalarK scale(const ScalarK& c, const ScalarK& s) { return c * s; }
inline PolyK scale(const PolyK& c, const ScalarK& s) { return c.scaled(s); }
inline Element scale(const Element& c, const ScalarK& s) { return c.scaled(s); }
} // namespace fock_detail

// Finite vector in the charged Fock space F_alpha, kept up to level max_level.
template <class C>
struct FockElement {
    ScalarK charge;
    int max_level = 6;
    std::map<Partition, C> terms;

    static FockElement vacuum(const ScalarK& charge, int max_level, C one) {
        FockElement e{charge, max_level, {}};
        e.terms.emplace(Partition{}, std::move(one));
        return e;
    }
    static FockElement basis(const ScalarK& charge, int max_level, Partition p, C one) {
        FockElement e{charge, max_level, {}};
        e.terms.emplace(std::move(p), std::move(one));
        return e;
    }

    bool is_zero() const { return terms.empty(); }
    // Adds c at p; terms above max_level throw when strict, else are dropped.
    void add(const Partition& p, const C& c, bool strict = true) {
        if (fock_detail::is_zero(c)) return;
        if (level_of(p) > max_level) {
            if (strict) throw LevelOverflow("level " + std::to_string(level_of(p)) + " exceeds truncation");
            return;
        }
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, c);
        } else {
            it->second = it->second + c;
            if (fock_detail::is_zero(it->second)) terms.erase(it);
        }
    }
    FockElement& operator+=(const FockElement& o) {
        for (const auto& [p, c] : o.terms) add(p, c);
        return *this;
    }
    friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
    friend FockElement operator-(FockElement a, const FockElement& b) {
        for (const auto& [p, c] : b.terms) a.add(p, fock_detail::scale(c, ScalarK(-1)));
        return a;
    }
    FockElement scaled(const ScalarK& s) const {
        FockElement r{charge, max_level, {}};
        for (const auto& [p, c] : terms) r.add(p, fock_detail::scale(c, s));
        return r;
    }
    FockElement times(const C& m) const {
        FockElement r{charge, max_level, {}};
        for (const auto& [p, c] : terms) r.add(p, c * m);
        return r;
    }
    FockElement truncated(int level) const {
        FockElement r{charge, level, {}};
        for (const auto& [p, c] : terms)
            if (level_of(p) <= level) r.terms.emplace(p, c);
        return r;
    }
    C component(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? C() : it->second;
    }
};

// a_n on e; [a_n, a_m] = 2n delta_{n+m,0}, a_0 = 2 alpha.
template <class C>
FockElement<C> apply_mode(int n, const FockElement<C>& e, bool strict = true) {
    FockElement<C> r{e.charge, e.max_level, {}};
    for (const auto& [p, c] : e.terms) {
        if (n < 0) {
            Partition q = p;
            q.insert(std::upper_bound(q.begin(), q.end(), -n), -n);
            r.add(q, c, strict);
        } else if (n == 0) {
            r.add(p, fock_detail::scale(c, e.charge * Rational(2)));
        } else {
            long mult = std::count(p.begin(), p.end(), n);
            if (!mult) continue;
            Partition q = p;
            q.erase(std::find(q.begin(), q.end(), n));
            r.add(q, fock_detail::scale(c, ScalarK(2 * n * mult)));
        }
    }
    return r;
}

// L_n = 1/4 sum_j :a_{n-j} a_j: - alpha0 (n+1) a_n.
template <class C>
FockElement<C> fock_virasoro(int n, const FockElement<C>& e, const ScalarK& alpha0, bool strict = true) {
    FockElement<C> r{e.charge, e.max_level, {}};
    int top = 0;
    for (const auto& [p, c] : e.terms) top = std::max(top, level_of(p));
    // :a_p a_q: with p <= q and p + q = n; a_q acts first and kills e once q > top
    for (int q = std::max(0, top); 2 * q >= n; --q) {
        ScalarK w = 2 * q == n ? ScalarK(Rational(1, 4)) : ScalarK(Rational(1, 2));
        r += apply_mode(n - q, apply_mode(q, e, strict), strict).scaled(w);
    }
    ScalarK s = alpha0 * ScalarK(long(-(n + 1)));
    if (!s.is_zero()) r += apply_mode(n, e, strict).scaled(s);
    return r;
}

// exp(sum_{n>=1} (1/n) s[n] a_{-n}) e, dropping levels above e.max_level. s[0] is the unit of C.
template <class C>
FockElement<C> exp_creation(const std::vector<C>& s, const FockElement<C>& e) {
    FockElement<C> r{e.charge, e.max_level, {}};
    for (int lvl = 0; lvl <= e.max_level; ++lvl)
        for (const Partition& mu : partitions_of(lvl)) {
            // prod_n (s_n/n)^{m_n} / m_n!
            C coef = s.at(0);
            Rational denom(1);
            for (size_t i = 0; i < mu.size();) {
                const int n = mu[i];
                long run = 0;
                for (; i < mu.size() && mu[i] == n; ++i) {
                    ++run;
                    coef = coef * s.at(size_t(n));
                    denom *= run * n;
                }
            }
            coef = fock_detail::scale(coef, ScalarK(Rational(Rational(1) / denom)));
            for (const auto& [p, c] : e.terms) {
                if (level_of(p) + lvl > e.max_level) continue;
                Partition q = p;
                q.insert(q.end(), mu.begin(), mu.end());
                std::sort(q.begin(), q.end());
                r.add(q, c * coef, false);
            }
        }
    return r;
}

// exp(-sum_{n>=1} (1/n) r[n] a_n) e; r[0] is unused.
template <class C>
FockElement<C> exp_annihilation(const std::vector<C>& r, const FockElement<C>& e) {
    FockElement<C> out = e, term = e;
    for (int k = 1; !term.is_zero(); ++k) {
        FockElement<C> next{e.charge, e.max_level, {}};
        for (size_t n = 1; n < r.size(); ++n)
            next += apply_mode(int(n), term).times(r[n]).scaled(ScalarK(Rational(-1, long(n) * k)));
        term = next;
        out += term;
    }
    return out;
}

} // namespace slevir

namespace slevir {

// {unit, sum_i a_i z_i, sum_i a_i z_i^2, ...} up to index `top`; z_i may be any C.
template <class C>
std::vector<C> power_sums(const std::vector<std::pair<ScalarK, C>>& charges, int top, const C& unit) {
    std::vector<C> s{unit};
    std::vector<C> pw(charges.size(), unit);
    for (int n = 1; n <= top; ++n) {
        C acc{};
        for (size_t i = 0; i < charges.size(); ++i) {
            pw[i] = pw[i] * charges[i].second;
            acc = acc + fock_detail::scale(pw[i], charges[i].first);
        }
        s.push_back(acc);
    }
    return s;
}

// U^-(z_1..) e = exp(sum (1/n)(sum_i a_i z_i^n) a_{-n}) e with polynomial z_i.
FockElement<PolyK> u_minus(const std::vector<std::pair<ScalarK, Var>>& charges, const FockElement<PolyK>& e);

} // namespace slevir
