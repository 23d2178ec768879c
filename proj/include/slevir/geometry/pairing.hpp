#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace slevir {

// N boundary points, L non-crossing pairs (I, J) with I < J, 1-based. Unpaired
// points send their curve to infinity, so no unpaired point may sit inside a pair.
struct PairingConfig {
    int N = 0;
    std::vector<std::pair<int, int>> pairs;  // sorted by left endpoint

    int L() const { return static_cast<int>(pairs.size()); }
    // partner[I] for I in 1..N, 0 when unpaired. Index 0 is unused.
    std::vector<int> partners() const;
    bool paired(int I, int J) const;
    // A pair strictly contains another pair.
    bool nested() const;
    bool operator==(const PairingConfig&) const = default;
};

// Walk omega(0..N): +1 at points that are not right endpoints, -1 at right endpoints.
using Walk = std::vector<int>;

Walk config_to_walk(const PairingConfig& p);
// Inverse of config_to_walk. Throws DomainError if the walk goes negative or a step is not +-1.
PairingConfig walk_to_config(const Walk& w);
// "u"/"d" step string, e.g. "uudd".
std::string walk_encoding(const Walk& w);

// Non-crossing, no unpaired point inside a pair, indices in range and distinct.
bool is_valid_config(const PairingConfig& p);

// All configurations with L pairs, in lexicographic order of their step strings ("d" < "u").
std::vector<PairingConfig> enumerate_configs(int N, int L);
// (N + 1 - 2L) N! / (L! (N - L + 1)!)
std::uint64_t config_count(int N, int L);

// Configuration left after deleting the adjacent pair (I, I+1) and renumbering.
PairingConfig erase_pair(const PairingConfig& p, int I);

} // namespace slevir
