#pragma once

#include "slevir/algebra/laurent_series.hpp"

#include <functional>
#include <vector>

namespace slevir {

// Hydrodynamically normalized map f(z) = z + sum_{m<=-2} f_m z^{1+m}, truncated at depth D.
// The coefficients f_{-2..-D} are symbols by default; any polynomial values may be supplied.
// Every coefficient of z^{n-k} in f^n is homogeneous of degree k, so f^n is exact down to z^{n-D}.
class MapSeries {
public:
    explicit MapSeries(int depth);
    // coeffs[i] is the value of f_{-2-i}; depth = coeffs.size() + 1.
    explicit MapSeries(std::vector<PolyQ> coeffs);
    static MapSeries identity(int depth);

    int depth() const { return depth_; }
    // f_m with the conventions f_0 = 1, f_{-1} = 0; zero above 0 or below -D.
    PolyQ coefficient(int m) const;

    SeriesQ series() const;      // window [1-D, 1]
    SeriesQ derivative() const;  // window [-D, 0]
    SeriesQ power(int n) const;  // window [n-D, n]
    SeriesQ schwarzian() const;  // window [-2-D, -4]

    // (1/(f(z) - x)^p) expanded in |f(z)| > |x|: window [-p-D, -p].
    SeriesQ inverse_power_expansion(const PolyQ& x, int p) const;

    // Same expansion with x taken from another coefficient ring C; `lift` embeds Q-polynomials in C.
    template <class C>
    LaurentSeries<C> inverse_power_expansion(const C& x, int p,
                                             const std::function<C(const PolyQ&)>& lift) const {
        if (p < 1) throw DomainError("inverse power expansion needs p >= 1");
        const int lo = -p - depth_;
        LaurentSeries<C> total = LaurentSeries<C>::make(lo, -p, false, {});
        C xm = lift(PolyQ(1));
        Rational binom = 1;  // C(m+p-1, p-1)
        for (int m = 0; -p - m >= lo; ++m) {
            if (m > 0) {
                xm = xm * x;
                binom = binom * ratio(m + p - 1, m);
            }
            SeriesQ fm = power(-p - m).truncated(lo);
            LaurentSeries<C> term = fm.map_coeffs<C>([&](const PolyQ& c) { return lift(c.scaled(binom)) * xm; });
            total = total + term;
        }
        return total;
    }

private:
    int depth_;
    std::vector<PolyQ> f_;  // f_[i] = f_{-2-i}
};

} // namespace slevir
