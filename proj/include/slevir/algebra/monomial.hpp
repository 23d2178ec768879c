#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace slevir {

// Variable identified by a fixed slot. Point variables x_i, y_k, w_r; Loewner-map
// coefficients f_m (m <= -2); and a few auxiliary symbols used by identity tests.
class Var {
public:
    enum class Kind : uint8_t { X, Y, W, F, Aux };

    static constexpr int kX = 6, kY = 4, kW = 4, kF = 14, kAux = 4;
    static constexpr int kSlots = kX + kY + kW + kF + kAux;
    static constexpr int kMaxDepth = kF + 1;  // deepest f index is f_{-kMaxDepth}

    constexpr Var() = default;
    static Var x(int i);       // i >= 1
    static Var y(int k);       // k >= 1
    static Var w(int r);       // r >= 1
    static Var f(int m);       // m <= -2
    static Var aux(int a);     // a >= 0
    static Var from_slot(int slot);
    static Var parse(const std::string& name);

    int slot() const { return slot_; }
    Kind kind() const;
    // 1-based index for points, m for f_m, a for aux.
    int index() const;
    bool is_point() const { return kind() == Kind::X || kind() == Kind::Y || kind() == Kind::W; }
    // Homogeneity weight: 1 for points and auxiliaries, -m for f_m.
    int weight() const;
    std::string name() const;

    friend bool operator==(Var a, Var b) { return a.slot_ == b.slot_; }
    friend bool operator!=(Var a, Var b) { return a.slot_ != b.slot_; }
    friend bool operator<(Var a, Var b) { return a.slot_ < b.slot_; }

private:
    explicit constexpr Var(uint8_t s) : slot_(s) {}
    uint8_t slot_ = 0;
};

// Exponent vector over all variable slots.
class Monomial {
public:
    Monomial() { e_.fill(0); }
    static Monomial of(Var v, int power = 1);

    int operator[](Var v) const { return e_[static_cast<size_t>(v.slot())]; }
    void set(Var v, int power);
    bool is_one() const;
    int total_degree() const;
    int weighted_degree() const;
    // Largest f-depth |m| present, 0 if none.
    int f_depth() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    std::string to_string() const;

private:
    std::array<uint8_t, Var::kSlots> e_;
};

} // namespace slevir
