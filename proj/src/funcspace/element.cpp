#include "slevir/funcspace/element.hpp"

#include <sstream>

namespace slevir {

std::optional<PolyK> divide_by_difference(const PolyK& p, Var hi, Var lo) {
    if (p.is_zero()) return PolyK();
    const int n = p.degree_in(hi);
    if (n == 0) return std::nullopt;
    std::vector<PolyK> c(static_cast<size_t>(n) + 1);
    for (const auto& [m, a] : p.terms()) {
        Monomial m2 = m;
        m2.set(hi, 0);
        c[static_cast<size_t>(m[hi])].add_term(m2, a);
    }
    const Monomial mlo = Monomial::of(lo);
    std::vector<PolyK> q(static_cast<size_t>(n));
    q[static_cast<size_t>(n - 1)] = c[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 1; --k)
        q[static_cast<size_t>(k - 1)] = c[static_cast<size_t>(k)] + q[static_cast<size_t>(k)].times_monomial(mlo);
    PolyK rem = c[0] + q[0].times_monomial(mlo);
    if (!rem.is_zero()) return std::nullopt;
    PolyK out;
    for (int k = 0; k < n; ++k) out += q[static_cast<size_t>(k)].times_monomial(Monomial::of(hi, k));
    return out;
}

PolyK difference_power(Var hi, Var lo, int n) {
    PolyK d = PolyK::var(hi) - PolyK::var(lo);
    return d.pow(n);
}

Element::Element(const PolyK& p) {
    if (!p.is_zero()) blocks_.emplace(Signature{}, Block{{}, p});
}

Element::Element(const ScalarK& c) : Element(PolyK(c)) {}

Element Element::power(Var hi, Var lo, const ScalarK& e) {
    return from_block(Prefactor{{PairKey{lo, hi}, e}}, PolyK(ScalarK(1)));
}

Element Element::from_block(Prefactor pre, PolyK poly) {
    Element r;
    r.insert(Block{std::move(pre), std::move(poly)});
    return r;
}

bool Element::SigLess::operator()(const Signature& a, const Signature& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].first < b[i].first) return true;
        if (b[i].first < a[i].first) return false;
        if (a[i].second < b[i].second) return true;
        if (b[i].second < a[i].second) return false;
    }
    return false;
}

Element::Signature Element::signature(const Prefactor& pre) {
    Signature s;
    for (const auto& [k, e] : pre) {
        if (e.integer_value()) continue;
        s.emplace_back(k, e - ScalarK(e.integer_offset()));
    }
    return s;
}

void Element::canonicalize(Block& b) {
    if (b.poly.is_zero()) {
        b.pre.clear();
        return;
    }
    for (auto it = b.pre.begin(); it != b.pre.end();) {
        auto n = it->second.integer_value();
        if (n && *n >= 0) {
            if (*n > 0) b.poly = b.poly * difference_power(it->first.hi, it->first.lo, static_cast<int>(*n));
            it = b.pre.erase(it);
        } else {
            ++it;
        }
    }
    for (auto it = b.pre.begin(); it != b.pre.end();) {
        const bool integral = it->second.integer_value().has_value();
        while (!integral || *it->second.integer_value() < 0) {
            auto q = divide_by_difference(b.poly, it->first.hi, it->first.lo);
            if (!q) break;
            b.poly = std::move(*q);
            it->second += ScalarK(1);
        }
        auto n = it->second.integer_value();
        if (n && *n == 0) it = b.pre.erase(it);
        else ++it;
    }
}

void Element::insert(Block b) {
    canonicalize(b);
    if (b.poly.is_zero()) return;
    Signature sig = signature(b.pre);
    auto it = blocks_.find(sig);
    if (it == blocks_.end()) {
        blocks_.emplace(std::move(sig), std::move(b));
        return;
    }
    Block& a = it->second;
    Prefactor keys = a.pre;
    for (const auto& [k, e] : b.pre) keys.emplace(k, e);
    Block merged;
    PolyK pa = a.poly, pb = b.poly;
    for (const auto& [k, unused] : keys) {
        (void)unused;
        auto ia = a.pre.find(k);
        auto ib = b.pre.find(k);
        ScalarK ea = ia == a.pre.end() ? ScalarK(0) : ia->second;
        ScalarK eb = ib == b.pre.end() ? ScalarK(0) : ib->second;
        auto d = (ea - eb).integer_value();
        if (!d) throw DomainError("internal: merging blocks with incompatible exponents");
        if (*d > 0) {
            pa = pa * difference_power(k.hi, k.lo, static_cast<int>(*d));
            if (!eb.is_zero()) merged.pre.emplace(k, eb);
        } else {
            if (*d < 0) pb = pb * difference_power(k.hi, k.lo, static_cast<int>(-*d));
            if (!ea.is_zero()) merged.pre.emplace(k, ea);
        }
    }
    merged.poly = pa + pb;
    canonicalize(merged);
    if (merged.poly.is_zero()) blocks_.erase(it);
    else it->second = std::move(merged);
}

std::vector<Element::Block> Element::blocks() const {
    std::vector<Block> out;
    for (const auto& [s, b] : blocks_) out.push_back(b);
    return out;
}

std::optional<PolyK> Element::as_polynomial() const {
    if (blocks_.empty()) return PolyK();
    if (blocks_.size() != 1) return std::nullopt;
    const Block& b = blocks_.begin()->second;
    if (!b.pre.empty()) return std::nullopt;
    return b.poly;
}

bool Element::is_monomial_prefactor() const {
    return blocks_.size() == 1 && blocks_.begin()->second.poly.is_constant();
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [s, b] : r.blocks_) b.poly = -b.poly;
    return r;
}

Element operator+(const Element& a, const Element& b) {
    if (a.blocks_.size() < b.blocks_.size()) return b + a;
    Element r = a;
    for (const auto& [s, blk] : b.blocks_) r.insert(blk);
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [sa, ba] : a.blocks_)
        for (const auto& [sb, bb] : b.blocks_) {
            Element::Block blk;
            blk.pre = ba.pre;
            for (const auto& [k, e] : bb.pre) {
                auto [it, fresh] = blk.pre.emplace(k, e);
                if (!fresh) it->second += e;
            }
            blk.poly = ba.poly * bb.poly;
            r.insert(std::move(blk));
        }
    return r;
}

Element Element::scaled(const ScalarK& s) const {
    if (s.is_zero()) return {};
    Element r = *this;
    for (auto& [sig, b] : r.blocks_) b.poly = b.poly.scaled(s);
    return r;
}

Element Element::times(const PolyK& p) const {
    Element r;
    for (const auto& [s, b] : blocks_) r.insert(Block{b.pre, b.poly * p});
    return r;
}

Element Element::times(const PolyQ& p) const {
    Element r;
    for (const auto& [s, b] : blocks_) r.insert(Block{b.pre, mul_mixed(b.poly, p)});
    return r;
}

Element Element::derivative(Var v) const {
    Element r;
    for (const auto& [s, b] : blocks_) {
        r.insert(Block{b.pre, b.poly.derivative(v)});
        if (!v.is_point()) continue;
        for (const auto& [k, e] : b.pre) {
            if (k.hi != v && k.lo != v) continue;
            Block d{b.pre, b.poly.scaled(k.hi == v ? e : -e)};
            d.pre[k] = e - ScalarK(1);
            r.insert(std::move(d));
        }
    }
    return r;
}

Element Element::divided_by(const Element& z) const {
    if (!z.is_monomial_prefactor()) throw DomainError("can only divide by a pure prefactor");
    const Block& zb = z.blocks_.begin()->second;
    const ScalarK inv = zb.poly.constant_term().inverse();
    Element r;
    for (const auto& [s, b] : blocks_) {
        Block d{b.pre, b.poly.scaled(inv)};
        for (const auto& [k, e] : zb.pre) {
            auto [it, fresh] = d.pre.emplace(k, -e);
            if (!fresh) it->second -= e;
        }
        r.insert(std::move(d));
    }
    return r;
}

std::optional<ScalarK> Element::homogeneity_degree() const {
    std::optional<ScalarK> deg;
    for (const auto& [s, b] : blocks_) {
        ScalarK base(0);
        for (const auto& [k, e] : b.pre) base += e;
        for (const auto& [m, c] : b.poly.terms()) {
            ScalarK d = base + ScalarK(m.weighted_degree());
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
    }
    return deg;
}

int Element::f_depth() const {
    int d = 0;
    for (const auto& [s, b] : blocks_) d = std::max(d, b.poly.f_depth());
    return d;
}

bool Element::uses(Var v) const {
    for (const auto& [s, b] : blocks_) {
        if (b.poly.uses(v)) return true;
        for (const auto& [k, e] : b.pre)
            if (k.hi == v || k.lo == v) return true;
    }
    return false;
}

std::vector<Var> Element::point_variables() const {
    std::vector<Var> out;
    for (int s = 0; s < Var::kSlots; ++s) {
        Var v = Var::from_slot(s);
        if (v.is_point() && uses(v)) out.push_back(v);
    }
    return out;
}

std::string Element::to_string() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, b] : blocks_) {
        if (!first) os << " + ";
        first = false;
        for (const auto& [k, e] : b.pre) os << k.to_string() << "^(" << e.to_string() << ")*";
        os << "[" << b.poly.to_string() << "]";
    }
    return os.str();
}

int Chamber::position(Var v) const {
    for (size_t i = 0; i < order_.size(); ++i)
        if (order_[i] == v) return static_cast<int>(i);
    return -1;
}

Element Chamber::difference_power(Var a, Var b, const ScalarK& e) const {
    const int pa = position(a), pb = position(b);
    if (pa < 0 || pb < 0 || pa == pb) throw DomainError("variables not in chamber: " + a.name() + ", " + b.name());
    if (pa > pb) return Element::power(a, b, e);
    auto n = e.integer_value();
    if (!n) throw DomainError("non-integer power against the chamber order: (" + a.name() + "-" + b.name() + ")");
    Element r = Element::power(b, a, e);
    return (*n % 2) ? -r : r;
}

} // namespace slevir
