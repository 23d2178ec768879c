#include "slevir/algebra/monomial.hpp"

#include "slevir/algebra/errors.hpp"

#include <sstream>

namespace slevir {

namespace {
constexpr int kBaseY = Var::kX;
constexpr int kBaseW = kBaseY + Var::kY;
constexpr int kBaseF = kBaseW + Var::kW;
constexpr int kBaseAux = kBaseF + Var::kF;

const char* const kAuxNames[Var::kAux] = {"r", "s", "u", "v"};
} // namespace

Var Var::x(int i) {
    if (i < 1 || i > kX) throw DomainError("x index out of range: " + std::to_string(i));
    return Var(static_cast<uint8_t>(i - 1));
}
Var Var::y(int k) {
    if (k < 1 || k > kY) throw DomainError("y index out of range: " + std::to_string(k));
    return Var(static_cast<uint8_t>(kBaseY + k - 1));
}
Var Var::w(int r) {
    if (r < 1 || r > kW) throw DomainError("w index out of range: " + std::to_string(r));
    return Var(static_cast<uint8_t>(kBaseW + r - 1));
}
Var Var::f(int m) {
    if (m > -2 || -m > kMaxDepth) throw DepthError("f index out of range: " + std::to_string(m));
    return Var(static_cast<uint8_t>(kBaseF + (-m - 2)));
}
Var Var::aux(int a) {
    if (a < 0 || a >= kAux) throw DomainError("aux index out of range");
    return Var(static_cast<uint8_t>(kBaseAux + a));
}
Var Var::from_slot(int slot) {
    if (slot < 0 || slot >= kSlots) throw DomainError("bad variable slot");
    return Var(static_cast<uint8_t>(slot));
}

Var::Kind Var::kind() const {
    if (slot_ < kBaseY) return Kind::X;
    if (slot_ < kBaseW) return Kind::Y;
    if (slot_ < kBaseF) return Kind::W;
    if (slot_ < kBaseAux) return Kind::F;
    return Kind::Aux;
}

int Var::index() const {
    switch (kind()) {
    case Kind::X: return slot_ + 1;
    case Kind::Y: return slot_ - kBaseY + 1;
    case Kind::W: return slot_ - kBaseW + 1;
    case Kind::F: return -(slot_ - kBaseF + 2);
    default: return slot_ - kBaseAux;
    }
}

int Var::weight() const { return kind() == Kind::F ? -index() : 1; }

std::string Var::name() const {
    switch (kind()) {
    case Kind::X: return "x" + std::to_string(index());
    case Kind::Y: return "y" + std::to_string(index());
    case Kind::W: return "w" + std::to_string(index());
    case Kind::F: return "f" + std::to_string(index());
    default: return kAuxNames[index()];
    }
}

Var Var::parse(const std::string& name) {
    if (name.size() >= 2) {
        const std::string rest = name.substr(1);
        try {
            size_t pos = 0;
            int k = std::stoi(rest, &pos);
            if (pos == rest.size()) {
                switch (name[0]) {
                case 'x': return x(k);
                case 'y': return y(k);
                case 'w': return w(k);
                case 'f': return f(k);
                default: break;
                }
            }
        } catch (const std::logic_error&) {
        }
    }
    for (int a = 0; a < kAux; ++a)
        if (name == kAuxNames[a]) return aux(a);
    throw DomainError("unknown variable '" + name + "'");
}

Monomial Monomial::of(Var v, int power) {
    Monomial m;
    m.set(v, power);
    return m;
}

void Monomial::set(Var v, int power) {
    if (power < 0 || power > 255) throw DomainError("monomial exponent out of range");
    e_[static_cast<size_t>(v.slot())] = static_cast<uint8_t>(power);
}

bool Monomial::is_one() const {
    for (auto a : e_)
        if (a) return false;
    return true;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto a : e_) d += a;
    return d;
}

int Monomial::weighted_degree() const {
    int d = 0;
    for (int s = 0; s < Var::kSlots; ++s)
        if (e_[static_cast<size_t>(s)]) d += e_[static_cast<size_t>(s)] * Var::from_slot(s).weight();
    return d;
}

int Monomial::f_depth() const {
    for (int s = kBaseAux - 1; s >= kBaseF; --s)
        if (e_[static_cast<size_t>(s)]) return s - kBaseF + 2;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t s = 0; s < a.e_.size(); ++s) {
        int e = a.e_[s] + b.e_[s];
        if (e > 255) throw DomainError("monomial exponent overflow");
        r.e_[s] = static_cast<uint8_t>(e);
    }
    return r;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int s = 0; s < Var::kSlots; ++s) {
        int e = e_[static_cast<size_t>(s)];
        if (!e) continue;
        if (!first) os << "*";
        first = false;
        os << Var::from_slot(s).name();
        if (e > 1) os << "^" << e;
    }
    return first ? "1" : os.str();
}

} // namespace slevir
