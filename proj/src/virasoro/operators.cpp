#include "slevir/virasoro/operators.hpp"

#include "slevir/virasoro/residues.hpp"

#include <set>

namespace slevir {

namespace {

std::vector<Var> points_of(const WeightAssignment& w, const Element& e) {
    std::set<Var> s;
    for (const auto& [v, d] : w.delta) s.insert(v);
    for (Var v : e.point_variables()) s.insert(v);
    return {s.begin(), s.end()};
}

// f_m with f_0 = 1 and f_{-1} = 0.
PolyQ fm(int m) {
    if (m == 0) return PolyQ(Rational(1));
    if (m == -1 || m > 0) return {};
    if (-m > Var::kMaxDepth) throw DepthError("closed form needs f_" + std::to_string(m));
    return PolyQ::var(Var::f(m));
}

PolyQ closed_form_f_coefficient(int n, int l) {
    PolyQ r;
    if (n >= 2) {
        if (l <= -n) r = fm(n + l).scaled(Rational(-(1 + n + l)));
    } else if (n == 1) {
        if (l <= -3) r = fm(1 + l).scaled(Rational(-(2 + l)));
    } else if (n == 0) {
        r = fm(l).scaled(Rational(-l));
    } else if (n == -1) {
        PolyQ s = fm(l - 1).scaled(Rational(l));
        for (int m1 = 0; m1 >= l - 1; --m1) s -= fm(m1) * fm(l - 1 - m1);
        r = -s;
    } else if (n == -2) {
        PolyQ s = fm(l - 2).scaled(Rational(l - 1)) + fm(-2) * fm(l).scaled(Rational(4));
        for (int m1 = 0; m1 >= l - 2; --m1)
            for (int m2 = 0; m1 + m2 >= l - 2; --m2) s -= fm(m1) * fm(m2) * fm(l - 2 - m1 - m2);
        r = -s;
    } else {
        throw DomainError("closed form only for n >= -2");
    }
    return r;
}

} // namespace

Element FirstOrderOperator::derivation(const Element& e) const {
    Element r;
    for (const auto& [v, coef] : field) {
        if (coef.is_zero() || !e.uses(v)) continue;
        r += e.derivative(v).times(coef);
    }
    return r;
}

Element FirstOrderOperator::apply(const Element& e) const {
    Element r = derivation(e);
    if (!mult.is_zero()) r += e.times(mult);
    return r;
}

FirstOrderOperator L_residue(int n, const WeightAssignment& w, int depth) {
    FirstOrderOperator op;
    if (n <= -2) op.mult += to_polyk(schwarzian_mode(n)).scaled(w.c * Rational(1, 12));
    for (const auto& [v, d] : w.delta) {
        if (n <= 0 && !d.is_zero()) op.mult += to_polyk(weight_mode(n, v)).scaled(d);
    }
    for (int l = -2; l >= -depth; --l) {
        PolyQ b = coefficient_mode(n, l);
        if (!b.is_zero()) op.field[Var::f(l)] = std::move(b);
    }
    return op;
}

FirstOrderOperator L_closed_form(int n, const WeightAssignment& w, int depth) {
    FirstOrderOperator op;
    for (int l = -2; l >= -depth; --l) {
        PolyQ b = closed_form_f_coefficient(n, l);
        if (!b.is_zero()) op.field[Var::f(l)] = std::move(b);
    }
    if (n == -2) op.mult += to_polyk(fm(-2)).scaled(w.c * Rational(-1, 2));
    for (const auto& [v, d] : w.delta) {
        PolyQ x = PolyQ::var(v), q;
        switch (n) {
            case 0: q = PolyQ(Rational(1)); break;
            case -1: q = x.scaled(Rational(2)); break;
            case -2: q = x * x.scaled(Rational(3)) - fm(-2).scaled(Rational(4)); break;
            default: break;
        }
        if (!q.is_zero() && !d.is_zero()) op.mult += to_polyk(q).scaled(d);
    }
    return op;
}

namespace {

// Adds point vector fields (the closed form needs the union with the points of e).
void add_point_fields(FirstOrderOperator& op, int n, const std::vector<Var>& pts, bool closed) {
    for (Var v : pts) {
        PolyQ a;
        if (!closed) {
            a = translation_mode(n, v);
        } else {
            PolyQ x = PolyQ::var(v);
            switch (n) {
                case 1: a = PolyQ(Rational(1)); break;
                case 0: a = x; break;
                case -1: a = x * x - fm(-2).scaled(Rational(3)); break;
                case -2:
                    a = x * x * x - (x * fm(-2)).scaled(Rational(4)) - fm(-3).scaled(Rational(5));
                    break;
                default: break;
            }
        }
        if (!a.is_zero()) op.field[v] = std::move(a);
    }
}

} // namespace

Element apply_L_general(int n, const WeightAssignment& w, const Element& e) {
    FirstOrderOperator op = L_residue(n, w, e.f_depth());
    add_point_fields(op, n, points_of(w, e), false);
    return op.apply(e);
}

Element apply_L_explicit(int n, const WeightAssignment& w, const Element& e) {
    if (n < -2) throw DomainError("explicit L_n needs n >= -2");
    FirstOrderOperator op = L_closed_form(n, w, e.f_depth());
    add_point_fields(op, n, points_of(w, e), true);
    return op.apply(e);
}

Element apply_word(const std::vector<int>& word, const WeightAssignment& w, const Element& e) {
    Element r = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_L_general(*it, w, r);
    return r;
}

Element commutator_residual(int n, int m, const WeightAssignment& w, const Element& e) {
    Element r = apply_word({n, m}, w, e) - apply_word({m, n}, w, e) -
                apply_L_general(n + m, w, e).scaled(ScalarK(long(n - m)));
    if (n + m == 0) r -= e.scaled(w.c * ratio(long(n) * n * n - n, 12));
    return r;
}

Element apply_L_hat(int n, const WeightAssignment& w, const Element& z, const Element& phi) {
    return apply_L_general(n, w, z * phi).divided_by(z);
}

Element apply_L_hat_formula(int n, const WeightAssignment& w, const Element& z, const Element& phi) {
    Element both = z * phi;
    FirstOrderOperator op = L_residue(n, w, both.f_depth());
    add_point_fields(op, n, points_of(w, both), false);
    // sum_v field_v d_v log Z
    Element log_part;
    for (Var v : z.point_variables()) {
        auto it = op.field.find(v);
        if (it == op.field.end()) continue;
        log_part += z.derivative(v).divided_by(z).times(it->second);
    }
    return op.apply(phi) + phi * log_part;
}

} // namespace slevir
