#pragma once

#include "slevir/algebra/errors.hpp"
#include "slevir/algebra/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slevir {

struct ChamberError : Error {
    explicit ChamberError(const std::string& what) : Error("chamber_violation", what) {}
};

// The factor (hi - lo); hi comes later than lo in the chamber order, so it is positive there.
struct PairKey {
    Var lo, hi;
    friend bool operator==(const PairKey& a, const PairKey& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator<(const PairKey& a, const PairKey& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    }
    std::string to_string() const { return "(" + hi.name() + "-" + lo.name() + ")"; }
};

using Prefactor = std::map<PairKey, ScalarK>;

// Finite sum of prod (hi-lo)^e times polynomials with Q(t) coefficients.
//
// Canonical form: terms whose exponents agree mod Z are grouped in one block. Within a
// block, positive integer powers are multiplied out, and any factor (hi-lo) dividing the
// polynomial is pulled into the prefactor (for integer exponents only while they stay <= 0).
// The result is unique, so equality is structural.
class Element {
public:
    struct Block {
        Prefactor pre;
        PolyK poly;
    };

    Element() = default;
    Element(const PolyK& p);       // NOLINT
    Element(const ScalarK& c);     // NOLINT
    Element(long c) : Element(ScalarK(c)) {}  // NOLINT
    static Element from_poly(const PolyQ& p) { return Element(to_polyk(p)); }
    static Element var(Var v) { return Element(PolyK::var(v)); }
    // (hi - lo)^e, where hi must follow lo in the chamber.
    static Element power(Var hi, Var lo, const ScalarK& e);
    static Element from_block(Prefactor pre, PolyK poly);

    std::vector<Block> blocks() const;
    size_t block_count() const { return blocks_.size(); }
    bool is_zero() const { return blocks_.empty(); }
    // The polynomial if there is no prefactor.
    std::optional<PolyK> as_polynomial() const;
    // Single block with constant polynomial: a pure prefactor times a constant.
    bool is_monomial_prefactor() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element scaled(const ScalarK& s) const;
    Element times(const PolyK& p) const;
    Element times(const PolyQ& p) const;

    friend bool operator==(const Element& a, const Element& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element derivative(Var v) const;
    // Divide by a pure prefactor (a monomial-prefactor Element).
    Element divided_by(const Element& z) const;

    // Common homogeneity degree (points weigh 1, f_m weighs -m); nullopt if inhomogeneous or zero.
    std::optional<ScalarK> homogeneity_degree() const;
    int f_depth() const;
    bool uses(Var v) const;
    std::vector<Var> point_variables() const;

    // Numeric value; `value(v)` supplies point and f values. Throws ChamberError if some
    // prefactor base is not positive and PoleError at a pole of a coefficient.
    template <class V>
    double evaluate(V&& value, double t) const {
        double s = 0;
        for (const auto& [sig, b] : blocks_) {
            double pre = 1;
            for (const auto& [k, e] : b.pre) {
                double base = value(k.hi) - value(k.lo);
                if (!(base > 0)) throw ChamberError("point outside chamber: " + k.to_string() + " <= 0");
                pre *= std::pow(base, e.eval(t));
            }
            s += pre * b.poly.evaluate(value, [&](const ScalarK& c) { return c.eval(t); });
        }
        return s;
    }

    std::string to_string() const;

private:
    using Signature = std::vector<std::pair<PairKey, ScalarK>>;
    struct SigLess {
        bool operator()(const Signature& a, const Signature& b) const;
    };
    static Signature signature(const Prefactor& pre);
    static void canonicalize(Block& b);
    void insert(Block b);

    std::map<Signature, Block, SigLess> blocks_;
};

// Synthetic division of p by (hi - lo); returns the quotient if exact.
std::optional<PolyK> divide_by_difference(const PolyK& p, Var hi, Var lo);
PolyK difference_power(Var hi, Var lo, int n);

// Point-variable ordering of initial conditions.
class Chamber {
public:
    Chamber() = default;
    explicit Chamber(std::vector<Var> order) : order_(std::move(order)) {}
    const std::vector<Var>& order() const { return order_; }
    int position(Var v) const;
    bool contains(Var v) const { return position(v) >= 0; }
    // (a - b)^e as an Element. Against the chamber direction only integer e is allowed.
    Element difference_power(Var a, Var b, const ScalarK& e) const;
    // True if the values are strictly increasing along the order.
    template <class V>
    bool inside(V&& value) const {
        for (size_t i = 1; i < order_.size(); ++i)
            if (!(value(order_[i]) > value(order_[i - 1]))) return false;
        return true;
    }

private:
    std::vector<Var> order_;
};

} // namespace slevir
