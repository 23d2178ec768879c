#pragma once

#include "slevir/algebra/upoly.hpp"

#include <optional>
#include <string>

namespace slevir {

// Exact element of Q(t), where kappa = t^2. Stored as num/den with integer
// polynomials that are coprime, jointly content-free, and den has a positive lead.
class ScalarK {
public:
    ScalarK() : num_(), den_(UPolyZ::constant(1)) {}
    ScalarK(long a) : ScalarK(Rational(a)) {}  // NOLINT: implicit by design
    ScalarK(const Rational& a);                  // NOLINT
    static ScalarK from_parts(UPolyZ num, UPolyZ den);
    static ScalarK t();
    static ScalarK kappa();
    static ScalarK parse(const std::string& text);

    const UPolyZ& num() const { return num_; }
    const UPolyZ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Value if this is a rational constant.
    std::optional<Rational> constant_value() const;
    std::optional<long> integer_value() const;
    // True if num and den only involve even powers of t, i.e. this is a function of kappa.
    bool is_even() const { return num_.is_even() && den_.is_even(); }

    ScalarK operator-() const;
    ScalarK inverse() const;
    ScalarK pow(int e) const;
    friend ScalarK operator+(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator-(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator*(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator/(const ScalarK& a, const ScalarK& b);
    friend ScalarK operator*(const ScalarK& a, const Rational& b);
    friend ScalarK operator*(const Rational& b, const ScalarK& a) { return a * b; }
    ScalarK& operator+=(const ScalarK& b) { return *this = *this + b; }
    ScalarK& operator-=(const ScalarK& b) { return *this = *this - b; }
    ScalarK& operator*=(const ScalarK& b) { return *this = *this * b; }
    ScalarK& operator/=(const ScalarK& b) { return *this = *this / b; }

    friend bool operator==(const ScalarK& a, const ScalarK& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ScalarK& a, const ScalarK& b) { return !(a == b); }
    // Deterministic total order, only meaningful as a container key.
    friend bool operator<(const ScalarK& a, const ScalarK& b);

    // Exact specialization t -> t0. Throws PoleError at a pole.
    Rational at_t(const Rational& t0) const;
    // Exact specialization kappa -> k0; requires is_even().
    Rational at_kappa(const Rational& k0) const;
    // Same, returned as a constant ScalarK.
    ScalarK specialize_kappa(const Rational& k0) const { return ScalarK(at_kappa(k0)); }
    double eval(double t) const;

    // Splits e = r + k with k an integer and r a canonical representative of e mod Z
    // (the constant term of the polynomial part of r lies in [0,1)). Returns k.
    long integer_offset() const;

    std::string to_string() const;

private:
    static Rational div_const_term(const UPolyZ& n, const UPolyZ& d);
    UPolyZ num_, den_;
};

// Constants of the theory as exact functions of t.
namespace consts {
ScalarK central_charge(const ScalarK& kappa);   // (6-k)(3k-8)/(2k)
ScalarK h12(const ScalarK& kappa);              // (6-k)/(2k)
ScalarK alpha();                                // 1/t
ScalarK alpha0();                               // t/4 - 1/t
ScalarK alpha_plus();                           // t/2
ScalarK alpha_minus();                          // -2/t
ScalarK conformal_weight(const ScalarK& a);     // a^2 - 2 alpha0 a
} // namespace consts

} // namespace slevir
