#pragma once

#include "slevir/funcspace/element.hpp"

#include <map>
#include <optional>
#include <vector>

namespace slevir {

using SparseVector = std::map<size_t, ScalarK>;

// Linear coordinates for a family of Elements. Each tuple of Elements becomes one sparse
// vector; blocks are rewritten over a common prefactor per exponent class so that the map
// from Elements to vectors is linear.
std::vector<SparseVector> element_coordinates(const std::vector<std::vector<Element>>& tuples);
inline std::vector<SparseVector> element_coordinates(const std::vector<Element>& es) {
    std::vector<std::vector<Element>> t;
    for (const auto& e : es) t.push_back({e});
    return element_coordinates(t);
}

// Incremental reduced row echelon form over Q(t), tracking how each stored row arises from
// the inserted vectors.
class Echelon {
public:
    // Inserts vector number `index`. If it depends on earlier ones, returns the coefficients
    // (indexed like the inputs, own coefficient 1) of a vanishing combination.
    std::optional<std::map<size_t, ScalarK>> insert(SparseVector v, size_t index);
    size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseVector v;                     // pivot entry is 1
        std::map<size_t, ScalarK> comb;     // v = sum comb[i] * input_i
    };
    std::map<size_t, Row> rows_;            // by pivot key
};

size_t rank(const std::vector<SparseVector>& columns);
// Basis of {a : sum a_i columns_i = 0}; dense coefficient vectors.
std::vector<std::vector<ScalarK>> kernel(const std::vector<SparseVector>& columns);

} // namespace slevir
