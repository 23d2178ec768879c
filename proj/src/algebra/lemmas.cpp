#include "slevir/algebra/lemmas.hpp"

namespace slevir {

namespace {

PolyQ symbol_or_value(const std::optional<Rational>& v, int aux) {
    return v ? PolyQ(*v) : PolyQ::var(Var::aux(aux));
}

SeriesQ map_poly(const SeriesQ& s, const std::function<PolyQ(const PolyQ&)>& fn) {
    return s.map_coeffs<PolyQ>(fn);
}

LaurentSeries<SeriesQ> map_poly(const LaurentSeries<SeriesQ>& s, const std::function<PolyQ(const PolyQ&)>& fn) {
    return s.map_coeffs<SeriesQ>([&](const SeriesQ& inner) { return map_poly(inner, fn); });
}

PolyQ kill_f(const PolyQ& p, int depth) {
    PolyQ r = p;
    for (int m = -2; m >= -depth; --m) r = r.substitute(Var::f(m), PolyQ());
    return r;
}

// sum_m p_m * d/df_m applied coefficientwise.
template <class S>
S transport(const S& x, const MapSeries& f, const PolyQ& r) {
    S total;
    bool first = true;
    const SeriesQ e = f.inverse_power_expansion(r, 1);
    for (int m = -2; m >= -f.depth(); --m) {
        PolyQ pm = e.coeff(1 + m);
        Var v = Var::f(m);
        S term = map_poly(x, [&](const PolyQ& c) { return c.derivative(v) * pm; });
        total = first ? term : total + term;
        first = false;
    }
    return total;
}

bool all_zero(const SeriesQ& s) {
    for (int k = s.lo(); k <= s.hi(); ++k)
        if (!s.coeff(k).is_zero()) return false;
    return true;
}

} // namespace

const char* lemma_case_name(LemmaCase c) {
    switch (c) {
    case LemmaCase::A1a: return "A1a";
    case LemmaCase::A1b: return "A1b";
    case LemmaCase::A1c: return "A1c";
    case LemmaCase::A2: return "A2";
    }
    return "?";
}

LemmaInputs LemmaInputs::random(std::mt19937_64& rng) {
    LemmaInputs in;
    in.depth = 6 + static_cast<int>(rng() % 3);
    in.p = 1 + static_cast<int>(rng() % 3);
    auto pick = [&]() -> std::optional<Rational> {
        if (rng() % 2) return std::nullopt;
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 5);
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    in.r = pick();
    in.s = pick();
    return in;
}

PolyQ residue_p(const MapSeries& f, const PolyQ& x, int m) {
    return f.inverse_power_expansion(x, 1).coeff(1 + m);
}

LemmaResidual lemma_identity_residual(LemmaCase which, const LemmaInputs& in) {
    if (in.depth < 6) throw DepthError("lemma residuals need depth >= 6");
    MapSeries f(in.depth);
    const PolyQ r = symbol_or_value(in.r, 0);
    const PolyQ s = symbol_or_value(in.s, 1);
    const int p = in.p;
    LemmaResidual out{which, std::nullopt, std::nullopt, 0, false};
    // The residual's window runs from its lo up to the top exponent of the identity.
    auto finish = [&](SeriesQ res, int top) {
        if (in.identity_map) res = map_poly(res, [&](const PolyQ& c) { return kill_f(c, in.depth); });
        out.checked = std::max(0, top - res.lo() + 1);
        out.vanishes = all_zero(res);
        out.single = std::move(res);
        return out;
    };

    const SeriesQ fp = f.derivative();
    const SeriesQ fp2 = fp * fp;
    switch (which) {
    case LemmaCase::A1a: {
        SeriesQ lhs = transport(f.inverse_power_expansion(s, p), f, r);
        SeriesQ rhs = (f.inverse_power_expansion(r, 1) * f.inverse_power_expansion(s, p + 1)).scaled(-p);
        return finish(lhs - rhs, -p - 1);
    }
    case LemmaCase::A1b: {
        SeriesQ lhs = transport(fp2 * f.inverse_power_expansion(s, p), f, r);
        SeriesQ rhs = fp2 * ((f.inverse_power_expansion(r, 1) * f.inverse_power_expansion(s, p + 1)).scaled(-p) -
                             (f.inverse_power_expansion(r, 2) * f.inverse_power_expansion(s, p)).scaled(2));
        return finish(lhs - rhs, -p - 1);
    }
    case LemmaCase::A2: {
        SeriesQ lhs = transport(f.schwarzian(), f, r);
        SeriesQ rhs = (fp2 * f.inverse_power_expansion(r, 4)).scaled(-6);
        return finish(lhs - rhs, -4);
    }
    case LemmaCase::A1c: {
        // Outer variable w, inner variable z.
        using Nested = LaurentSeries<SeriesQ>;
        const SeriesQ fz = f.series();
        std::function<SeriesQ(const PolyQ&)> lift = [&](const PolyQ& c) {
            return SeriesQ::constant(c);
        };
        auto lift_outer = [&](const SeriesQ& s_w) {
            return s_w.map_coeffs<SeriesQ>([&](const PolyQ& c) { return SeriesQ::constant(c); });
        };
        auto inner_const = [&](const SeriesQ& s_z) { return Nested::constant(s_z); };

        const Nested inv_wz = f.inverse_power_expansion<SeriesQ>(fz, p, lift);  // 1/(f(w)-f(z))^p
        const Nested fpz2 = inner_const(fp2);
        Nested lhs = transport(fpz2 * inv_wz, f, r);
        const Nested ew = lift_outer(f.inverse_power_expansion(r, 1));
        const Nested ez1 = inner_const(f.inverse_power_expansion(r, 1));
        const Nested ez2 = inner_const(f.inverse_power_expansion(r, 2));
        Nested rhs = fpz2 * ((ew * ez1 * inv_wz).scaled(p) - (ez2 * inv_wz).scaled(2));
        Nested res = lhs - rhs;
        if (in.identity_map) res = map_poly(res, [&](const PolyQ& c) { return kill_f(c, in.depth); });
        out.vanishes = true;
        for (int k = res.lo(); k <= res.hi(); ++k) {
            const SeriesQ c = res.coeff(k);
            out.checked += std::max(0, -p + 1 - c.lo());
            if (!all_zero(c)) out.vanishes = false;
        }
        out.nested = std::move(res);
        return out;
    }
    }
    return out;
}

} // namespace slevir
