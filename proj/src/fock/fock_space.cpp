#include "slevir/fock/fock_space.hpp"

#include <functional>

namespace slevir {

std::vector<Partition> partitions_of(int level) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int min_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(level, 1);
    return out;
}

FockElement<PolyK> u_minus(const std::vector<std::pair<ScalarK, Var>>& charges, const FockElement<PolyK>& e) {
    std::vector<std::pair<ScalarK, PolyK>> zs;
    for (const auto& [a, v] : charges) zs.emplace_back(a, PolyK::var(v));
    return exp_creation(power_sums(zs, e.max_level, PolyK(ScalarK(1))), e);
}

} // namespace slevir
