#include "slevir/sle/variant.hpp"

#include "slevir/virasoro/residues.hpp"

#include <cmath>

namespace slevir {

std::string to_string(VariantKind k) {
    switch (k) {
        case VariantKind::Chordal: return "chordal";
        case VariantKind::KappaRho: return "kappa_rho";
        case VariantKind::Multiple: return "multiple";
    }
    return "?";
}

ScalarK SleVariant::h_x(int I) const { return consts::h12(kappa_curve.at(I - 1)); }
ScalarK SleVariant::central_charge() const { return consts::central_charge(kappa); }

WeightAssignment SleVariant::weights() const {
    WeightAssignment w;
    for (int I = 1; I <= N; ++I) w.delta[x(I)] = h_x(I);
    for (int K = 1; K <= M; ++K) w.delta[y(K)] = h_y.at(K - 1);
    w.c = central_charge();
    return w;
}

namespace {

Element later_minus_earlier(const Chamber& ch, Var a, Var b, const ScalarK& e) {
    return ch.position(a) > ch.position(b) ? Element::power(a, b, e) : Element::power(b, a, e);
}

void finish(SleVariant& v) {
    auto checks = check_variant(v);
    for (int I = 1; I <= v.N; ++I)
        if (!checks.null_field[I - 1])
            throw DomainError("partition function fails the null-field equation for curve " + std::to_string(I));
    auto d = v.Z.homogeneity_degree();
    v.Delta = d ? *d : ScalarK(0);
}

} // namespace

SleVariant make_chordal(const ScalarK& kappa) {
    SleVariant v;
    v.kind = VariantKind::Chordal;
    v.kappa = kappa;
    v.kappa_curve = {kappa};
    v.chamber = Chamber({Var::x(1)});
    v.Z = Element(1);
    finish(v);
    return v;
}

SleVariant make_kappa_rho(const std::vector<ScalarK>& rho, const ScalarK& kappa, std::vector<Var> order) {
    SleVariant v;
    v.kind = VariantKind::KappaRho;
    v.M = int(rho.size());
    v.kappa = kappa;
    v.kappa_curve = {kappa};
    v.rho = rho;
    if (order.empty()) {
        order.push_back(Var::x(1));
        for (int K = 1; K <= v.M; ++K) order.push_back(Var::y(K));
    }
    if (int(order.size()) != v.M + 1) throw DomainError("chamber order must list x1 and every y");
    v.chamber = Chamber(order);
    Element z(1);
    for (int K = 1; K <= v.M; ++K) {
        const ScalarK& r = rho[K - 1];
        v.h_y.push_back(r * (r + ScalarK(4) - kappa) / (ScalarK(4) * kappa));
        z = z * later_minus_earlier(v.chamber, Var::y(K), Var::x(1), r / kappa);
        for (int J = 1; J < K; ++J)
            z = z * later_minus_earlier(v.chamber, Var::y(J), Var::y(K),
                                        rho[J - 1] * r / (ScalarK(2) * kappa));
    }
    v.Z = z;
    finish(v);
    return v;
}

SleVariant make_multiple(int N, const ScalarK& exponent, const ScalarK& kappa) {
    std::vector<Var> order;
    for (int I = 1; I <= N; ++I) order.push_back(Var::x(I));
    Element z(1);
    for (int I = 1; I <= N; ++I)
        for (int J = I + 1; J <= N; ++J) z = z * Element::power(Var::x(J), Var::x(I), exponent);
    SleVariant v = make_custom(N, {}, z, Chamber(order), kappa);
    v.kind = VariantKind::Multiple;
    return v;
}

SleVariant make_custom(int N, std::vector<ScalarK> h_y, Element Z, Chamber chamber, const ScalarK& kappa,
                       std::vector<ScalarK> kappa_curve) {
    SleVariant v;
    v.kind = VariantKind::Multiple;
    v.N = N;
    v.M = int(h_y.size());
    v.kappa = kappa;
    v.kappa_curve = kappa_curve.empty() ? std::vector<ScalarK>(N, kappa) : std::move(kappa_curve);
    if (int(v.kappa_curve.size()) != N) throw DomainError("one kappa per curve");
    for (const auto& k : v.kappa_curve)
        if (k != kappa && k != ScalarK(16) / kappa) throw DomainError("curve kappa must be kappa or 16/kappa");
    v.h_y = std::move(h_y);
    v.chamber = std::move(chamber);
    v.Z = std::move(Z);
    finish(v);
    return v;
}

Element null_field(const SleVariant& v, int I, const Element& e) {
    const Var xi = v.x(I);
    Element r = e.derivative(xi).derivative(xi).scaled(v.kappa_curve[I - 1] * Rational(1, 2));
    auto add_point = [&](Var p, const ScalarK& weight_term) {
        if (!v.chamber.contains(p)) throw DomainError(p.name() + " is not in the chamber");
        Element inv = v.chamber.difference_power(p, xi, ScalarK(-1));
        Element inv2 = v.chamber.difference_power(p, xi, ScalarK(-2));
        r += (inv * e.derivative(p)).scaled(ScalarK(2)) + (inv2 * e).scaled(weight_term);
    };
    for (int J = 1; J <= v.N; ++J) {
        if (J == I) continue;
        const ScalarK& kj = v.kappa_curve[J - 1];
        add_point(v.x(J), (kj - ScalarK(6)) / kj);
    }
    for (int K = 1; K <= v.M; ++K) add_point(v.y(K), v.h_y[K - 1] * Rational(-2));
    return r;
}

PolyQ p_poly(int m, const PolyQ& f_minus_1) {
    if (m > -2) throw DomainError("p_m needs m <= -2");
    // p[k] = p_{-k}
    std::vector<PolyQ> p(size_t(-m) + 1);
    p[2] = PolyQ(Rational(1));
    auto f = [&](int k) { return k == 1 ? f_minus_1 : PolyQ::var(Var::f(-k)); };
    for (int k = 3; k <= -m; ++k) {
        PolyQ s;
        for (int j = 1; j <= k - 2; ++j) s -= f(j) * p[size_t(k - j)];
        p[size_t(k)] = s;
    }
    return p[size_t(-m)];
}

Element apply_A(const SleVariant& v, int I, const Element& e) {
    if (I < 1 || I > v.N) throw DomainError("curve index out of range");
    Element r = null_field(v, I, e);
    const PolyQ minus_x = -PolyQ::var(v.x(I));
    for (int m = -2; m >= -e.f_depth(); --m) {
        Var fm = Var::f(m);
        if (!e.uses(fm)) continue;
        r += e.derivative(fm).times(p_poly(m, minus_x).scaled(Rational(2)));
    }
    return r;
}

PolyQ q_poly(int n, Var x) { return weight_mode(n, x).scaled(Rational(-2)); }

VariantChecks check_variant(const SleVariant& v) {
    VariantChecks c;
    for (int I = 1; I <= v.N; ++I) c.null_field.push_back(null_field(v, I, v.Z).is_zero());
    Element shift;
    for (Var p : v.chamber.order()) shift += v.Z.derivative(p);
    c.translation_invariant = shift.is_zero();
    c.homogeneous = v.Z.homogeneity_degree().has_value();
    return c;
}

bool positivity_sampled(const SleVariant& v, double kappa_value, int samples, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> gap(0.05, 2.0);
    const auto& order = v.chamber.order();
    for (int s = 0; s < samples; ++s) {
        std::map<Var, double> val;
        double pos = std::uniform_real_distribution<double>(-3, 3)(rng);
        for (Var p : order) {
            val[p] = pos;
            pos += gap(rng);
        }
        double z = v.Z.evaluate([&](Var p) { return val.at(p); }, std::sqrt(kappa_value));
        if (!(z > 0) || !std::isfinite(z)) return false;
    }
    return true;
}

} // namespace slevir
