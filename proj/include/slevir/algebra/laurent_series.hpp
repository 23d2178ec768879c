#pragma once

#include "slevir/algebra/errors.hpp"
#include "slevir/algebra/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

namespace slevir {

template <class C>
class LaurentSeries;

inline Rational scale_coeff(const Rational& c, const Rational& s) { return c * s; }
inline ScalarK scale_coeff(const ScalarK& c, const Rational& s) { return c * s; }
template <class C>
Polynomial<C> scale_coeff(const Polynomial<C>& c, const Rational& s) {
    return c.scaled(C(s));
}
template <class C>
LaurentSeries<C> scale_coeff(const LaurentSeries<C>& c, const Rational& s) {
    return c.scaled(s);
}
template <class C>
bool coeff_is_zero(const Polynomial<C>& c) {
    return c.is_zero();
}
template <class C>
bool coeff_is_zero(const LaurentSeries<C>& c) {
    return c.is_exact_zero();
}

// Truncated formal Laurent series at infinity: sum_k c_k z^k with k <= hi.
// Coefficients with exponent in [lo, hi] are known; exponents above hi are zero.
// Below lo nothing is known unless the series is exact (a Laurent polynomial).
// Reading an unknown coefficient throws WindowError.
template <class C>
class LaurentSeries {
public:
    // Exact zero.
    LaurentSeries() : lo_(0), hi_(-1), exact_(true) {}
    // Integer constants, so that series can serve as coefficients of series.
    LaurentSeries(long c) : LaurentSeries() {  // NOLINT
        if (c != 0) *this = constant(C(c));
    }

    static LaurentSeries monomial(const C& c, int k) {
        return LaurentSeries(k, k, true, std::vector<C>{c});
    }
    static LaurentSeries constant(const C& c) { return monomial(c, 0); }
    // Coefficients c[i] belong to exponent lo + i.
    static LaurentSeries make(int lo, int hi, bool exact, std::vector<C> c) {
        return LaurentSeries(lo, hi, exact, std::move(c));
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool exact() const { return exact_; }
    bool is_exact_zero() const { return exact_ && hi_ < lo_; }
    bool known(int k) const { return k > hi_ || k >= lo_ || exact_; }

    C coeff(int k) const {
        if (k > hi_) return C(0);
        if (k >= lo_) return c_[static_cast<size_t>(k - lo_)];
        if (exact_) return C(0);
        throw WindowError("coefficient z^" + std::to_string(k) + " outside guaranteed window [" +
                          std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    }
    C residue() const { return coeff(-1); }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    LaurentSeries scaled(const Rational& s) const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = scale_coeff(c, s);
        r.trim();
        return r;
    }
    LaurentSeries times_coeff(const C& s) const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }
    // Multiply by z^k.
    LaurentSeries shifted(int k) const {
        LaurentSeries r = *this;
        r.lo_ += k;
        r.hi_ += k;
        return r;
    }
    // Forget everything below exponent lo.
    LaurentSeries truncated(int lo) const {
        if (lo <= lo_) {
            if (exact_ && lo < lo_) {
                LaurentSeries r = *this;
                r.exact_ = false;
                return r.extended_to(lo);
            }
            LaurentSeries r = *this;
            r.exact_ = false;
            return r;
        }
        std::vector<C> c;
        for (int k = lo; k <= hi_; ++k) c.push_back(coeff(k));
        return LaurentSeries(lo, std::max(hi_, lo - 1), false, std::move(c));
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        return combine(a, b, false);
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return combine(a, b, true);
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) return {};
        const int hi = a.hi_ + b.hi_;
        int lo;
        bool exact = false;
        if (a.exact_ && b.exact_) {
            lo = a.lo_ + b.lo_;
            exact = true;
        } else if (a.exact_) {
            lo = b.lo_ + a.hi_;
        } else if (b.exact_) {
            lo = a.lo_ + b.hi_;
        } else {
            lo = std::max(a.lo_ + b.hi_, b.lo_ + a.hi_);
        }
        if (lo > hi) return LaurentSeries(lo, lo - 1, false, {});
        std::vector<C> c(static_cast<size_t>(hi - lo + 1), C(0));
        for (int i = a.lo_; i <= a.hi_; ++i) {
            const C& ai = a.c_[static_cast<size_t>(i - a.lo_)];
            if (coeff_is_zero(ai)) continue;
            const int jmin = std::max(b.lo_, lo - i), jmax = std::min(b.hi_, hi - i);
            for (int j = jmin; j <= jmax; ++j) {
                const C& bj = b.c_[static_cast<size_t>(j - b.lo_)];
                if (coeff_is_zero(bj)) continue;
                C& slot = c[static_cast<size_t>(i + j - lo)];
                slot = slot + ai * bj;
            }
        }
        return LaurentSeries(lo, hi, exact, std::move(c));
    }
    LaurentSeries& operator+=(const LaurentSeries& b) { return *this = *this + b; }
    LaurentSeries& operator-=(const LaurentSeries& b) { return *this = *this - b; }
    LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }

    LaurentSeries derivative() const {
        std::vector<C> c(c_.size(), C(0));
        for (int k = lo_; k <= hi_; ++k) c[static_cast<size_t>(k - lo_)] = scale_coeff(coeff(k), Rational(k));
        return LaurentSeries(lo_ - 1, hi_ - 1, exact_, std::move(c));
    }

    // Integer power. Negative powers require a unit leading coefficient equal to 1;
    // for an exact input, `min_lo` bounds the otherwise infinite result.
    LaurentSeries power(int n, int min_lo = INT_MIN) const {
        if (n >= 0) {
            LaurentSeries r = constant(C(1)), b = *this;
            int e = n;
            while (e > 0) {
                if (e & 1) r = r * b;
                e >>= 1;
                if (e) b = b * b;
            }
            return min_lo == INT_MIN ? r : r.truncated(min_lo);
        }
        if (hi_ < lo_ || !(coeff(hi_) == C(1)))
            throw DomainError("negative power of a series needs leading coefficient 1");
        int depth;  // number of subleading terms to compute
        if (exact_) {
            if (min_lo == INT_MIN) throw WindowError("negative power of an exact series needs a bound");
            depth = hi_ * n - min_lo;
        } else {
            depth = hi_ - lo_;
            if (min_lo != INT_MIN) depth = std::min(depth, hi_ * n - min_lo);
        }
        if (depth < 0) return LaurentSeries(hi_ * n + 1, hi_ * n, false, {});
        // J.C.P. Miller recurrence for u^n with u = 1 + sum_j g_j x^j, x = 1/z.
        std::vector<C> g(static_cast<size_t>(depth) + 1, C(0));
        for (int j = 1; j <= depth; ++j) g[static_cast<size_t>(j)] = coeff(hi_ - j);
        std::vector<C> v(static_cast<size_t>(depth) + 1, C(0));
        v[0] = C(1);
        for (int k = 1; k <= depth; ++k) {
            C acc(0);
            for (int j = 1; j <= k; ++j) {
                const C& gj = g[static_cast<size_t>(j)];
                if (coeff_is_zero(gj)) continue;
                long w = static_cast<long>(n + 1) * j - k;
                if (w == 0) continue;
                acc = acc + scale_coeff(gj * v[static_cast<size_t>(k - j)], Rational(w));
            }
            v[static_cast<size_t>(k)] = scale_coeff(acc, Rational(1, k));
        }
        std::reverse(v.begin(), v.end());
        const int top = hi_ * n;
        return LaurentSeries(top - depth, top, false, std::move(v));
    }

    template <class D, class F>
    LaurentSeries<D> map_coeffs(F&& fn) const {
        std::vector<D> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(fn(x));
        return LaurentSeries<D>::make(lo_, hi_, exact_, std::move(c));
    }

    std::string to_string() const {
        std::string s;
        for (int k = hi_; k >= lo_; --k) {
            const C& c = c_[static_cast<size_t>(k - lo_)];
            if (coeff_is_zero(c)) continue;
            if (!s.empty()) s += " + ";
            s += "[" + c.to_string() + "] z^" + std::to_string(k);
        }
        if (s.empty()) s = "0";
        if (!exact_) s += " + O(z^" + std::to_string(lo_ - 1) + ")";
        return s;
    }

private:
    LaurentSeries(int lo, int hi, bool exact, std::vector<C> c)
        : lo_(lo), hi_(hi), exact_(exact), c_(std::move(c)) {
        if (static_cast<int>(c_.size()) != std::max(0, hi_ - lo_ + 1))
            c_.resize(static_cast<size_t>(std::max(0, hi_ - lo_ + 1)), C(0));
        trim();
    }

    LaurentSeries extended_to(int lo) const {
        std::vector<C> c(static_cast<size_t>(lo_ - lo), C(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return LaurentSeries(lo, hi_, exact_, std::move(c));
    }

    // Lower hi past zero leading coefficients; for exact series also raise lo.
    void trim() {
        while (hi_ >= lo_ && coeff_is_zero(c_.back())) {
            c_.pop_back();
            --hi_;
        }
        if (exact_) {
            size_t z = 0;
            while (z < c_.size() && coeff_is_zero(c_[z])) ++z;
            if (z) {
                c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
                lo_ += static_cast<int>(z);
            }
            if (c_.empty()) {
                lo_ = 0;
                hi_ = -1;
            }
        }
    }

    static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool sub) {
        int lo;
        bool exact = a.exact_ && b.exact_;
        if (exact) {
            if (a.is_exact_zero()) return sub ? -b : b;
            if (b.is_exact_zero()) return a;
            lo = std::min(a.lo_, b.lo_);
        } else if (a.exact_) {
            lo = b.lo_;
        } else if (b.exact_) {
            lo = a.lo_;
        } else {
            lo = std::max(a.lo_, b.lo_);
        }
        int hi = std::max(a.hi_, b.hi_);
        if (hi < lo) return LaurentSeries(lo, lo - 1, exact, {});
        std::vector<C> c;
        c.reserve(static_cast<size_t>(hi - lo + 1));
        for (int k = lo; k <= hi; ++k) {
            C x = a.coeff(k);
            C y = b.coeff(k);
            c.push_back(sub ? x - y : x + y);
        }
        return LaurentSeries(lo, hi, exact, std::move(c));
    }

    int lo_, hi_;
    bool exact_;
    std::vector<C> c_;
};

using SeriesQ = LaurentSeries<PolyQ>;

} // namespace slevir
