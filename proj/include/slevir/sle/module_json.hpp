#pragma once

#include "slevir/funcspace/element_json.hpp"
#include "slevir/sle/module.hpp"

namespace slevir {

inline constexpr const char* kModuleSchema = "slevir.module.v1";
inline constexpr const char* kSingularSchema = "slevir.singular.v1";

Json variant_to_json(const SleVariant& v);
Json module_to_json(const SleVariant& v, const ModuleBasis& mb);
Json singular_report_to_json(const SingularNullReport& r);
Json mobius_report_to_json(const MobiusReport& r);

} // namespace slevir
