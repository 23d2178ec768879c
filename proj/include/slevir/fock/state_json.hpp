#pragma once

#include "slevir/fock/state.hpp"
#include "slevir/funcspace/element_json.hpp"

namespace slevir {

inline constexpr const char* kStateSchema = "slevir.state.v1";

// {"schema", "variant", "components": [{"basis": [n_1..], "level", "value", "annihilated"}]}
// `annihilated` is filled only when checks are given (one per component).
Json state_to_json(const SleVariant& v, const std::vector<StateComponent>& comps, const std::vector<bool>& checks = {});

} // namespace slevir
