#include "slevir/fock/state_json.hpp"

#include "slevir/sle/module_json.hpp"

namespace slevir {

Json state_to_json(const SleVariant& v, const std::vector<StateComponent>& comps, const std::vector<bool>& checks) {
    Json out;
    out["schema"] = kStateSchema;
    out["variant"] = variant_to_json(v);
    out["components"] = Json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        Json c;
        c["basis"] = comps[i].basis;
        c["level"] = level_of(comps[i].basis);
        c["value"] = element_to_json(Element(comps[i].value));
        c["display"] = Element(comps[i].value).to_string();
        if (i < checks.size()) c["annihilated"] = static_cast<bool>(checks[i]);
        out["components"].push_back(c);
    }
    return out;
}

} // namespace slevir
