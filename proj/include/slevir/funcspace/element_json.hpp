#pragma once

#include "slevir/funcspace/element.hpp"

#include <json.hpp>

namespace slevir {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
Json integer_to_json(const Integer& a);
Integer integer_from_json(const Json& j);

// {"num": [...], "den": [...]}: integer coefficient arrays in t, lowest degree first.
Json scalar_to_json(const ScalarK& s);
ScalarK scalar_from_json(const Json& j);

// {"terms": [{"coeff", "prefactor": [{"pair": [a, b], "exp"}], "monomial": {var: power}}]}
// where pair [a, b] stands for (a - b) with a later than b in the chamber.
Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

} // namespace slevir
