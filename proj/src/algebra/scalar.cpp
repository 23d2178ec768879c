#include "slevir/algebra/scalar.hpp"

#include "slevir/algebra/errors.hpp"

#include <cctype>
#include <cmath>

namespace slevir {

namespace {

void normalize_content(UPolyZ& n, UPolyZ& d) {
    Integer cn = n.content(), cd = d.content();
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (sgn(d.lead()) < 0) g = -g;
    if (g != 1) {
        n = n.divided(g);
        d = d.divided(g);
    }
}

} // namespace

ScalarK::ScalarK(const Rational& value) {
    den_ = UPolyZ::constant(1);
    if (sgn(value) == 0) return;
    Rational a = value;
    a.canonicalize();
    num_ = UPolyZ::constant(a.get_num());
    den_ = UPolyZ::constant(a.get_den());
}

ScalarK ScalarK::from_parts(UPolyZ n, UPolyZ d) {
    if (d.is_zero()) throw DivisionByZero("zero denominator in Q(t)");
    ScalarK r;
    if (n.is_zero()) return r;
    UPolyZ g = UPolyZ::gcd_primitive(n, d);
    if (g.degree() > 0) {
        n = UPolyZ::exact_div(n, g);
        d = UPolyZ::exact_div(d, g);
    }
    normalize_content(n, d);
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

ScalarK ScalarK::t() {
    ScalarK r;
    r.num_ = UPolyZ::monomial(1, 1);
    return r;
}

ScalarK ScalarK::kappa() {
    ScalarK r;
    r.num_ = UPolyZ::monomial(1, 2);
    return r;
}

std::optional<Rational> ScalarK::constant_value() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    Rational r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
}

std::optional<long> ScalarK::integer_value() const {
    auto c = constant_value();
    if (!c || c->get_den() != 1 || !c->get_num().fits_slong_p()) return std::nullopt;
    return c->get_num().get_si();
}

ScalarK ScalarK::operator-() const {
    ScalarK r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarK ScalarK::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(t)");
    ScalarK r;
    r.num_ = den_;
    r.den_ = num_;
    if (sgn(r.den_.lead()) < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

ScalarK ScalarK::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ScalarK r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ScalarK operator+(const ScalarK& a, const ScalarK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return ScalarK::from_parts(a.num_ + b.num_, a.den_);
    UPolyZ g = UPolyZ::gcd_primitive(a.den_, b.den_);
    UPolyZ da = a.den_, db = b.den_;
    if (g.degree() > 0) {
        da = UPolyZ::exact_div(da, g);
        db = UPolyZ::exact_div(db, g);
    }
    return ScalarK::from_parts(a.num_ * db + b.num_ * da, a.den_ * db);
}

ScalarK operator-(const ScalarK& a, const ScalarK& b) { return a + (-b); }

ScalarK operator*(const ScalarK& a, const ScalarK& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPolyZ n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    UPolyZ g1 = UPolyZ::gcd_primitive(n1, d2);
    if (g1.degree() > 0) {
        n1 = UPolyZ::exact_div(n1, g1);
        d2 = UPolyZ::exact_div(d2, g1);
    }
    UPolyZ g2 = UPolyZ::gcd_primitive(n2, d1);
    if (g2.degree() > 0) {
        n2 = UPolyZ::exact_div(n2, g2);
        d1 = UPolyZ::exact_div(d1, g2);
    }
    ScalarK r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    normalize_content(r.num_, r.den_);
    return r;
}

ScalarK operator*(const ScalarK& a, const Rational& b) {
    if (a.is_zero() || sgn(b) == 0) return {};
    ScalarK r;
    r.num_ = a.num_.scaled(b.get_num());
    r.den_ = a.den_.scaled(b.get_den());
    normalize_content(r.num_, r.den_);
    return r;
}

ScalarK operator/(const ScalarK& a, const ScalarK& b) { return a * b.inverse(); }

bool operator<(const ScalarK& a, const ScalarK& b) {
    auto cmp_poly = [](const UPolyZ& p, const UPolyZ& q) {
        if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
        for (int k = p.degree(); k >= 0; --k) {
            int c = mpz_cmp(p.coeffs()[static_cast<size_t>(k)].get_mpz_t(), q.coeffs()[static_cast<size_t>(k)].get_mpz_t());
            if (c) return c < 0 ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_poly(a.num_, b.num_);
    if (c) return c < 0;
    return cmp_poly(a.den_, b.den_) < 0;
}

Rational ScalarK::at_t(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (sgn(d) == 0) throw PoleError("specialization at a pole of " + to_string());
    Rational r = num_.eval(t0) / d;
    r.canonicalize();
    return r;
}

Rational ScalarK::at_kappa(const Rational& k0) const {
    if (!is_even()) throw DomainError("specialization at kappa needs an even function of t: " + to_string());
    auto half = [](const UPolyZ& p) {
        std::vector<Integer> c;
        for (size_t i = 0; i < p.coeffs().size(); i += 2) c.push_back(p.coeffs()[i]);
        return UPolyZ(std::move(c));
    };
    UPolyZ n = half(num_), d = half(den_);
    Rational dv = d.eval(k0);
    if (sgn(dv) == 0) throw PoleError("specialization at a pole of " + to_string());
    Rational r = n.eval(k0) / dv;
    r.canonicalize();
    return r;
}

double ScalarK::eval(double t) const {
    double d = den_.eval(t);
    if (d == 0.0) throw PoleError("evaluation at a pole of " + to_string());
    return num_.eval(t) / d;
}

Rational ScalarK::div_const_term(const UPolyZ& n, const UPolyZ& d) {
    // Long division over Q, tracking only what is needed for the quotient's constant term.
    if (n.degree() < d.degree()) return 0;
    std::vector<Rational> r(n.coeffs().begin(), n.coeffs().end());
    const int dd = d.degree();
    Rational lead(d.lead());
    Rational q0 = 0;
    for (int k = n.degree() - dd; k >= 0; --k) {
        Rational qk = r[static_cast<size_t>(k + dd)] / lead;
        if (sgn(qk) == 0) continue;
        for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(k + j)] -= qk * Rational(d.coeffs()[static_cast<size_t>(j)]);
        if (k == 0) q0 = qk;
    }
    return q0;
}

long ScalarK::integer_offset() const {
    if (is_zero()) return 0;
    Rational q0 = div_const_term(num_, den_);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q0.get_num_mpz_t(), q0.get_den_mpz_t());
    if (!f.fits_slong_p()) throw DomainError("exponent offset overflow");
    return f.get_si();
}

std::string ScalarK::to_string() const {
    const bool ev = is_even();
    auto render = [&](const UPolyZ& p) {
        if (!ev) return p.to_string("t");
        std::vector<Integer> c;
        for (size_t i = 0; i < p.coeffs().size(); i += 2) c.push_back(p.coeffs()[i]);
        return UPolyZ(std::move(c)).to_string("kappa");
    };
    std::string n = render(num_);
    if (den_.is_constant() && den_.coeff(0) == 1) return n;
    auto wrap = [](const std::string& s, const char* ops) {
        return s.find_first_of(ops, 1) == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(n, "+-") + "/" + wrap(render(den_), "+-*/");
}

// Recursive-descent parser: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := ('-' factor) | atom ('^' int)?; atom := number | 't' | 'kappa' | '(' expr ')'.
namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw DomainError("cannot parse scalar '" + s + "': " + why);
    }
    ScalarK expr() {
        ScalarK v = term();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '+') {
                ++i;
                v = v + term();
            } else if (i < s.size() && s[i] == '-') {
                ++i;
                v = v - term();
            } else {
                return v;
            }
        }
    }
    ScalarK term() {
        ScalarK v = factor();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                v = v * factor();
            } else if (i < s.size() && s[i] == '/') {
                ++i;
                v = v / factor();
            } else {
                return v;
            }
        }
    }
    ScalarK factor() {
        skip();
        if (i < s.size() && s[i] == '-') {
            ++i;
            return -factor();
        }
        ScalarK a = atom();
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip();
            bool neg = false;
            if (i < s.size() && s[i] == '-') {
                neg = true;
                ++i;
            }
            size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (j == i) fail("expected integer exponent");
            int e = std::stoi(s.substr(j, i - j));
            a = a.pow(neg ? -e : e);
        }
        return a;
    }
    ScalarK atom() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '(') {
            ++i;
            ScalarK v = expr();
            skip();
            if (i >= s.size() || s[i] != ')') fail("missing ')'");
            ++i;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return ScalarK(Rational(Integer(s.substr(j, i - j))));
        }
        if (s.compare(i, 5, "kappa") == 0) {
            i += 5;
            return ScalarK::kappa();
        }
        if (s[i] == 't') {
            ++i;
            return ScalarK::t();
        }
        fail(std::string("unexpected '") + s[i] + "'");
    }
};

} // namespace

ScalarK ScalarK::parse(const std::string& text) {
    Parser p{text};
    ScalarK v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

namespace consts {

ScalarK central_charge(const ScalarK& k) {
    return (ScalarK(6) - k) * (ScalarK(3) * k - ScalarK(8)) / (ScalarK(2) * k);
}

ScalarK h12(const ScalarK& k) { return (ScalarK(6) - k) / (ScalarK(2) * k); }

ScalarK alpha() { return ScalarK::t().inverse(); }

ScalarK alpha0() { return ScalarK::t() * Rational(1, 4) - ScalarK::t().inverse(); }

ScalarK alpha_plus() { return ScalarK::t() * Rational(1, 2); }

ScalarK alpha_minus() { return ScalarK(-2) / ScalarK::t(); }

ScalarK conformal_weight(const ScalarK& a) { return a * a - ScalarK(2) * alpha0() * a; }

} // namespace consts

} // namespace slevir
