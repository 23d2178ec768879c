#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace slevir {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical a/b (mpq_class(a, b) alone does not reduce).
inline Rational ratio(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Dense univariate polynomial with integer coefficients, lowest degree first.
// The zero polynomial has no coefficients; otherwise the last coefficient is nonzero.
class UPolyZ {
public:
    UPolyZ() = default;
    explicit UPolyZ(std::vector<Integer> c);
    static UPolyZ constant(const Integer& a);
    static UPolyZ monomial(const Integer& a, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lead() const { return c_.back(); }
    Integer coeff(int k) const;
    // Index of lowest nonzero coefficient (t-adic valuation); -1 for zero.
    int valuation() const;
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monomial() const;

    Integer content() const;
    UPolyZ primitive() const;

    friend UPolyZ operator+(const UPolyZ& a, const UPolyZ& b);
    friend UPolyZ operator-(const UPolyZ& a, const UPolyZ& b);
    friend UPolyZ operator*(const UPolyZ& a, const UPolyZ& b);
    UPolyZ operator-() const;
    UPolyZ scaled(const Integer& a) const;
    // Exact division of all coefficients by a.
    UPolyZ divided(const Integer& a) const;
    UPolyZ shifted_down(int k) const;

    friend bool operator==(const UPolyZ& a, const UPolyZ& b) { return a.c_ == b.c_; }

    // Pseudo-remainder of a by b.
    static UPolyZ prem(const UPolyZ& a, const UPolyZ& b);
    // Exact quotient in Z[t]; throws if b does not divide a.
    static UPolyZ exact_div(const UPolyZ& a, const UPolyZ& b);
    // Primitive gcd with positive leading coefficient.
    static UPolyZ gcd_primitive(const UPolyZ& a, const UPolyZ& b);

    Rational eval(const Rational& t) const;
    double eval(double t) const;
    bool is_even() const;

    std::string to_string(const char* var = "t") const;

private:
    void trim();
    std::vector<Integer> c_;
};

} // namespace slevir
