#pragma once

#include "slevir/algebra/monomial.hpp"
#include "slevir/algebra/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace slevir {

inline bool coeff_is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool coeff_is_zero(const ScalarK& a) { return a.is_zero(); }
inline std::string coeff_to_string(const Rational& a) { return a.get_str(); }
inline std::string coeff_to_string(const ScalarK& a) { return a.to_string(); }

// Sparse multivariate polynomial over a coefficient ring C (Rational or ScalarK).
template <class C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C>;

    Polynomial() = default;
    Polynomial(const C& c) {  // NOLINT: constants embed implicitly
        if (!coeff_is_zero(c)) t_.emplace(Monomial(), c);
    }
    Polynomial(long c) : Polynomial(C(c)) {}  // NOLINT
    static Polynomial var(Var v, int power = 1) { return term(C(1), Monomial::of(v, power)); }
    static Polynomial term(const C& c, const Monomial& m) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    C constant_term() const {
        auto it = t_.find(Monomial());
        return it == t_.end() ? C(0) : it->second;
    }
    C coefficient(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& b) {
        for (const auto& [m, c] : b.t_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        for (const auto& [m, c] : b.t_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
    Polynomial scaled(const C& s) const {
        if (coeff_is_zero(s)) return {};
        Polynomial r = *this;
        for (auto& [m, c] : r.t_) c = c * s;
        return r;
    }
    Polynomial times_monomial(const Monomial& mono) const {
        Polynomial r;
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m * mono, c);
        return r;
    }
    Polynomial pow(int e) const {
        Polynomial r(C(1)), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Polynomial derivative(Var v) const {
        Polynomial r;
        for (const auto& [m, c] : t_) {
            int e = m[v];
            if (!e) continue;
            Monomial m2 = m;
            m2.set(v, e - 1);
            r.add_term(m2, c * C(e));
        }
        return r;
    }

    // Replace variable v by the polynomial q.
    Polynomial substitute(Var v, const Polynomial& q) const {
        Polynomial r;
        std::map<int, Polynomial> powers;
        for (const auto& [m, c] : t_) {
            int e = m[v];
            Monomial m2 = m;
            m2.set(v, 0);
            if (!e) {
                r.add_term(m2, c);
                continue;
            }
            auto it = powers.find(e);
            if (it == powers.end()) it = powers.emplace(e, q.pow(e)).first;
            r += it->second.times_monomial(m2).scaled(c);
        }
        return r;
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m[v]);
        return d;
    }
    int f_depth() const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.f_depth());
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }
    // Common weighted degree of all terms; nullopt if inhomogeneous or zero.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : t_) {
            int k = m.weighted_degree();
            if (d && *d != k) return std::nullopt;
            d = k;
        }
        return d;
    }
    bool uses(Var v) const {
        for (const auto& [m, c] : t_)
            if (m[v]) return true;
        return false;
    }

    template <class D, class F>
    Polynomial<D> map_coeffs(F&& fn) const {
        Polynomial<D> r;
        for (const auto& [m, c] : t_) r.add_term(m, fn(c));
        return r;
    }

    // Numeric evaluation; `value` maps a variable to its value and `cval` a coefficient.
    template <class V, class CV>
    double evaluate(V&& value, CV&& cval) const {
        double s = 0;
        for (const auto& [m, c] : t_) {
            double p = cval(c);
            for (int k = 0; k < Var::kSlots; ++k) {
                Var v = Var::from_slot(k);
                int e = m[v];
                if (e) p *= std::pow(value(v), e);
            }
            s += p;
        }
        return s;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (!(i->first == j->first) || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_to_string(it->second) << ")";
            if (!it->first.is_one()) os << "*" << it->first.to_string();
        }
        return os.str();
    }

private:
    Terms t_;
};

using PolyQ = Polynomial<Rational>;
using PolyK = Polynomial<ScalarK>;

inline PolyK to_polyk(const PolyQ& p) {
    return p.map_coeffs<ScalarK>([](const Rational& c) { return ScalarK(c); });
}

// Product of a Q(t)-polynomial with a Q-polynomial without promoting the latter.
inline PolyK mul_mixed(const PolyK& a, const PolyQ& b) {
    PolyK r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

} // namespace slevir
