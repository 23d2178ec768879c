#include "slevir/algebra/map_series.hpp"

namespace slevir {

MapSeries::MapSeries(int depth) : depth_(depth) {
    if (depth < 2 || depth > Var::kMaxDepth) throw DepthError("map series depth out of range");
    for (int m = -2; m >= -depth; --m) f_.push_back(PolyQ::var(Var::f(m)));
}

MapSeries::MapSeries(std::vector<PolyQ> coeffs) : depth_(static_cast<int>(coeffs.size()) + 1), f_(std::move(coeffs)) {
    if (depth_ < 2) throw DepthError("map series depth out of range");
}

MapSeries MapSeries::identity(int depth) {
    return MapSeries(std::vector<PolyQ>(static_cast<size_t>(depth - 1)));
}

PolyQ MapSeries::coefficient(int m) const {
    if (m == 0) return PolyQ(1);
    if (m > 0 || m == -1 || m < -depth_) return {};
    return f_[static_cast<size_t>(-m - 2)];
}

SeriesQ MapSeries::series() const {
    std::vector<PolyQ> c;
    for (int k = 1 - depth_; k <= 1; ++k) c.push_back(coefficient(k - 1));
    return SeriesQ::make(1 - depth_, 1, false, std::move(c));
}

SeriesQ MapSeries::derivative() const { return series().derivative(); }

SeriesQ MapSeries::power(int n) const {
    if (n == 0) return SeriesQ::constant(PolyQ(1)).truncated(-depth_);
    return series().power(n);
}

SeriesQ MapSeries::schwarzian() const {
    SeriesQ d1 = derivative();
    SeriesQ d2 = d1.derivative();
    SeriesQ d3 = d2.derivative();
    SeriesQ inv = d1.power(-1);
    SeriesQ q = d2 * inv;
    return d3 * inv - (q * q).scaled(Rational(3, 2));
}

SeriesQ MapSeries::inverse_power_expansion(const PolyQ& x, int p) const {
    return inverse_power_expansion<PolyQ>(x, p, [](const PolyQ& c) { return c; });
}

} // namespace slevir
