#include "slevir/algebra/upoly.hpp"

#include "slevir/algebra/errors.hpp"

#include <algorithm>
#include <sstream>

namespace slevir {

UPolyZ::UPolyZ(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

UPolyZ UPolyZ::constant(const Integer& a) { return UPolyZ(std::vector<Integer>{a}); }

UPolyZ UPolyZ::monomial(const Integer& a, int degree) {
    std::vector<Integer> c(static_cast<size_t>(degree) + 1);
    c[static_cast<size_t>(degree)] = a;
    return UPolyZ(std::move(c));
}

void UPolyZ::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer UPolyZ::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

int UPolyZ::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return -1;
}

bool UPolyZ::is_monomial() const {
    if (c_.empty()) return false;
    return valuation() == degree();
}

Integer UPolyZ::content() const {
    Integer g = 0;
    for (const auto& a : c_) {
        if (sgn(a) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPolyZ UPolyZ::primitive() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (sgn(lead()) < 0) g = -g;
    return divided(g);
}

UPolyZ operator+(const UPolyZ& a, const UPolyZ& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPolyZ(std::move(c));
}

UPolyZ operator-(const UPolyZ& a, const UPolyZ& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPolyZ(std::move(c));
}

UPolyZ operator*(const UPolyZ& a, const UPolyZ& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPolyZ(std::move(c));
}

UPolyZ UPolyZ::operator-() const {
    UPolyZ r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UPolyZ UPolyZ::scaled(const Integer& a) const {
    if (sgn(a) == 0) return {};
    UPolyZ r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

UPolyZ UPolyZ::divided(const Integer& a) const {
    if (a == 1) return *this;
    UPolyZ r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t());
    return r;
}

UPolyZ UPolyZ::shifted_down(int k) const {
    if (k <= 0) return *this;
    if (k > degree()) return {};
    return UPolyZ(std::vector<Integer>(c_.begin() + k, c_.end()));
}

UPolyZ UPolyZ::prem(const UPolyZ& a, const UPolyZ& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial pseudo-remainder by zero");
    UPolyZ r = a;
    const int db = b.degree();
    const Integer& lb = b.lead();
    int e = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        Integer lr = r.lead();
        // r <- lb*r - lr*t^shift*b
        r = r.scaled(lb);
        std::vector<Integer> c = r.c_;
        for (int j = 0; j <= db; ++j) c[static_cast<size_t>(j + shift)] -= lr * b.c_[static_cast<size_t>(j)];
        r = UPolyZ(std::move(c));
        --e;
    }
    if (e > 0) {
        Integer m;
        mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        r = r.scaled(m);
    }
    return r;
}

UPolyZ UPolyZ::exact_div(const UPolyZ& a, const UPolyZ& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
    std::vector<Integer> r = a.c_;
    std::vector<Integer> q(static_cast<size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        Integer& top = r[static_cast<size_t>(k + db)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
            throw DomainError("inexact polynomial division");
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= qk * b.c_[static_cast<size_t>(j)];
        q[static_cast<size_t>(k)] = qk;
    }
    for (const auto& x : r)
        if (sgn(x) != 0) throw DomainError("inexact polynomial division");
    return UPolyZ(std::move(q));
}

UPolyZ UPolyZ::gcd_primitive(const UPolyZ& a, const UPolyZ& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return constant(1);
    // Monomial fast path: gcd(p, t^k) = t^min(k, val p).
    if (b.is_monomial()) return monomial(1, std::min(b.valuation(), a.valuation()));
    if (a.is_monomial()) return monomial(1, std::min(a.valuation(), b.valuation()));
    UPolyZ p = a.primitive(), q = b.primitive();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        UPolyZ r = prem(p, q);
        p = std::move(q);
        q = r.primitive();
    }
    return p.primitive();
}

Rational UPolyZ::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + Rational(*it);
    return r;
}

double UPolyZ::eval(double t) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->get_d();
    return r;
}

bool UPolyZ::is_even() const {
    for (size_t i = 1; i < c_.size(); i += 2)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

std::string UPolyZ::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& a = c_[static_cast<size_t>(k)];
        if (sgn(a) == 0) continue;
        Integer m = abs(a);
        if (!first) os << (sgn(a) < 0 ? "-" : "+");
        else if (sgn(a) < 0) os << "-";
        first = false;
        if (k == 0 || m != 1) os << m.get_str();
        if (k > 0) {
            if (m != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace slevir
