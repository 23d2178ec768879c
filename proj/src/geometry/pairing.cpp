#include "slevir/geometry/pairing.hpp"

#include "slevir/algebra/errors.hpp"

#include <algorithm>
#include <functional>

namespace slevir {

std::vector<int> PairingConfig::partners() const {
    std::vector<int> out(N + 1, 0);
    for (auto [a, b] : pairs) {
        out[a] = b;
        out[b] = a;
    }
    return out;
}

bool PairingConfig::paired(int I, int J) const {
    if (I > J) std::swap(I, J);
    return std::find(pairs.begin(), pairs.end(), std::make_pair(I, J)) != pairs.end();
}

bool PairingConfig::nested() const {
    for (auto [a, b] : pairs)
        for (auto [c, d] : pairs)
            if (a < c && d < b) return true;
    return false;
}

bool is_valid_config(const PairingConfig& p) {
    std::vector<int> seen(p.N + 1, 0);
    for (auto [a, b] : p.pairs) {
        if (a < 1 || b > p.N || a >= b) return false;
        if (seen[a]++ || seen[b]++) return false;
    }
    for (auto [a, b] : p.pairs) {
        for (auto [c, d] : p.pairs)
            if (a < c && c < b && b < d) return false;
        for (int k = a + 1; k < b; ++k)
            if (!seen[k]) return false;
    }
    return true;
}

Walk config_to_walk(const PairingConfig& p) {
    auto partner = p.partners();
    Walk w(p.N + 1, 0);
    for (int I = 1; I <= p.N; ++I) {
        bool right = partner[I] != 0 && partner[I] < I;
        w[I] = w[I - 1] + (right ? -1 : 1);
    }
    return w;
}

PairingConfig walk_to_config(const Walk& w) {
    if (w.empty() || w[0] != 0) throw DomainError("walk must start at 0");
    PairingConfig p;
    p.N = static_cast<int>(w.size()) - 1;
    // Left endpoints still waiting for a partner. Points that go up with nothing to
    // close later are rays; we only learn which at the end, so track all ups.
    std::vector<int> open;
    for (int I = 1; I <= p.N; ++I) {
        int step = w[I] - w[I - 1];
        if (step == 1) {
            open.push_back(I);
        } else if (step == -1) {
            if (open.empty() || w[I] < 0) throw DomainError("walk goes below zero");
            p.pairs.emplace_back(open.back(), I);
            open.pop_back();
        } else {
            throw DomainError("walk steps must be +1 or -1");
        }
    }
    std::sort(p.pairs.begin(), p.pairs.end());
    return p;
}

std::string walk_encoding(const Walk& w) {
    std::string s;
    for (std::size_t i = 1; i < w.size(); ++i) s += w[i] > w[i - 1] ? 'u' : 'd';
    return s;
}

std::vector<PairingConfig> enumerate_configs(int N, int L) {
    if (N < 0 || L < 0 || 2 * L > N) throw DomainError("need 0 <= L <= N/2");
    std::vector<PairingConfig> out;
    Walk w(N + 1, 0);
    std::function<void(int, int)> rec = [&](int I, int downs) {
        if (I > N) {
            if (downs == L) out.push_back(walk_to_config(w));
            return;
        }
        int rest = N - I + 1;
        if (downs < L && w[I - 1] > 0) {
            w[I] = w[I - 1] - 1;
            rec(I + 1, downs + 1);
        }
        if (L - downs <= rest - 1) {
            w[I] = w[I - 1] + 1;
            rec(I + 1, downs);
        }
    };
    rec(1, 0);
    return out;
}

std::uint64_t config_count(int N, int L) {
    if (N < 0 || L < 0 || 2 * L > N) throw DomainError("need 0 <= L <= N/2");
    // binom(N, L) * (N + 1 - 2L) / (N - L + 1), exact in integers.
    std::uint64_t b = 1;
    for (int i = 1; i <= L; ++i) b = b * (N - L + i) / i;
    return b * (N + 1 - 2 * L) / (N - L + 1);
}

PairingConfig erase_pair(const PairingConfig& p, int I) {
    if (!p.paired(I, I + 1)) throw DomainError("points are not an adjacent pair");
    PairingConfig q;
    q.N = p.N - 2;
    auto shift = [I](int k) { return k < I ? k : k - 2; };
    for (auto [a, b] : p.pairs)
        if (a != I) q.pairs.emplace_back(shift(a), shift(b));
    return q;
}

} // namespace slevir
