#include "slevir/fock/state.hpp"

namespace slevir {

std::vector<std::pair<ScalarK, Var>> kappa_rho_charges(const SleVariant& v) {
    if (v.kind == VariantKind::Multiple || v.N != 1) throw DomainError("state components need SLE_kappa(rho)");
    if (v.kappa != ScalarK::kappa()) throw DomainError("state components need generic kappa");
    std::vector<std::pair<ScalarK, Var>> ch{{consts::alpha(), v.x(1)}};
    for (int K = 1; K <= v.M; ++K) ch.emplace_back(v.rho[K - 1] * consts::alpha() * Rational(1, 2), v.y(K));
    return ch;
}

std::vector<StateComponent> coulomb_state(const std::vector<std::pair<ScalarK, Var>>& charges, int L_max, int D) {
    ScalarK beta;
    for (const auto& c : charges) beta += c.first;
    auto vac = FockElement<PolyK>::vacuum(beta, L_max, PolyK(ScalarK(1)));
    FockElement<PolyK> psi = u_minus(charges, vac);
    FockElement<PolyK> state = apply_enveloping(build_Gf(D), psi, consts::alpha0());
    std::vector<StateComponent> out;
    for (int lvl = 0; lvl <= L_max; ++lvl)
        for (const auto& p : partitions_of(lvl)) out.push_back({p, state.component(p)});
    return out;
}

std::vector<StateComponent> state_components(const SleVariant& v, int L_max, int D) {
    return coulomb_state(kappa_rho_charges(v), L_max, D);
}

Element coulomb_product(const std::vector<std::pair<ScalarK, Var>>& charges, const Chamber& chamber) {
    Element h(1);
    for (size_t i = 0; i < charges.size(); ++i)
        for (size_t j = i + 1; j < charges.size(); ++j) {
            Var a = charges[i].second, b = charges[j].second;
            ScalarK e = charges[i].first * charges[j].first * Rational(2);
            if (chamber.position(a) > chamber.position(b)) std::swap(a, b);
            h = h * Element::power(b, a, e);
        }
    return h;
}

Element coulomb_null_field_residual(const std::vector<ScalarK>& alpha_y) {
    const ScalarK K = ScalarK::kappa();
    std::vector<std::pair<ScalarK, Var>> ch{{consts::alpha(), Var::x(1)}};
    std::vector<Var> order{Var::x(1)};
    std::vector<ScalarK> h_y;
    for (size_t k = 0; k < alpha_y.size(); ++k) {
        ch.emplace_back(alpha_y[k], Var::y(int(k) + 1));
        order.push_back(Var::y(int(k) + 1));
        h_y.push_back(consts::conformal_weight(alpha_y[k]));
    }
    SleVariant sv;
    sv.N = 1;
    sv.M = int(alpha_y.size());
    sv.kappa = K;
    sv.kappa_curve = {K};
    sv.h_y = h_y;
    sv.chamber = Chamber(order);
    return null_field(sv, 1, coulomb_product(ch, sv.chamber));
}

namespace {

struct ScreenedSetup {
    SleVariant sv;
    std::vector<std::pair<ScalarK, Var>> charges;
    Element h;
};

ScreenedSetup screened(int N, int L, std::vector<Var> order) {
    const ScalarK K = ScalarK::kappa();
    if (order.empty()) {
        for (int i = 1; i <= N; ++i) {
            order.push_back(Var::x(i));
            if (i <= L) order.push_back(Var::w(i));
        }
    }
    ScreenedSetup s;
    s.sv.kind = VariantKind::Multiple;
    s.sv.N = N;
    s.sv.kappa = K;
    s.sv.kappa_curve.assign(size_t(N), K);
    s.sv.chamber = Chamber(order);
    for (int i = 1; i <= N; ++i) s.charges.emplace_back(consts::alpha(), Var::x(i));
    for (int r = 1; r <= L; ++r) s.charges.emplace_back(consts::alpha_minus(), Var::w(r));
    s.h = coulomb_product(s.charges, s.sv.chamber);
    return s;
}

Element total_derivative(const ScreenedSetup& s, int L, int I, const Element& eta) {
    Element r;
    for (int R = 1; R <= L; ++R)
        r += (s.sv.chamber.difference_power(Var::w(R), Var::x(I), ScalarK(-1)) * eta).derivative(Var::w(R));
    return r.scaled(ScalarK(2));
}

} // namespace

Element screening_identity(int N, int L, int I, std::vector<Var> order) {
    ScreenedSetup s = screened(N, L, std::move(order));
    return null_field(s.sv, I, s.h) + total_derivative(s, L, I, s.h);
}

bool multiple_state_total_derivative(int N, int L, int I, int L_max, int D, std::vector<Var> order) {
    ScreenedSetup s = screened(N, L, std::move(order));
    const int top = std::min(L_max, D);
    for (const auto& c : coulomb_state(s.charges, top, D)) {
        Element eta = s.h * Element(c.value);
        if (!(apply_A(s.sv, I, eta) + total_derivative(s, L, I, eta)).is_zero()) return false;
    }
    return true;
}

} // namespace slevir
