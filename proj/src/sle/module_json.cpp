#include "slevir/sle/module_json.hpp"

namespace slevir {

namespace {

Json scalars(const std::vector<ScalarK>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(scalar_to_json(x));
    return a;
}

} // namespace

Json variant_to_json(const SleVariant& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["N"] = v.N;
    j["M"] = v.M;
    j["kappa"] = scalar_to_json(v.kappa);
    j["kappa_text"] = v.kappa.to_string();
    j["kappa_curve"] = scalars(v.kappa_curve);
    j["h_y"] = scalars(v.h_y);
    if (!v.rho.empty()) j["rho"] = scalars(v.rho);
    Json order = Json::array();
    for (Var p : v.chamber.order()) order.push_back(p.name());
    j["chamber"] = order;
    j["Z"] = element_to_json(v.Z);
    j["Delta"] = scalar_to_json(v.Delta);
    return j;
}

Json module_to_json(const SleVariant& v, const ModuleBasis& mb) {
    Json j;
    j["schema"] = kModuleSchema;
    j["variant"] = variant_to_json(v);
    j["generator"] = element_to_json(mb.generator);
    j["graded_dimensions"] = mb.graded_dimensions();
    j["annihilated"] = mb.annihilated;
    Json levels = Json::array();
    for (const auto& l : mb.levels) {
        Json lj;
        lj["level"] = l.level;
        lj["dimension"] = l.dimension();
        Json basis = Json::array();
        for (size_t i = 0; i < l.words.size(); ++i)
            basis.push_back({{"word", l.words[i]}, {"element", element_to_json(l.elements[i])}});
        lj["basis"] = basis;
        levels.push_back(lj);
    }
    j["levels"] = levels;
    return j;
}

Json singular_report_to_json(const SingularNullReport& r) {
    Json j;
    j["schema"] = kSingularSchema;
    j["level"] = r.level;
    j["kappa"] = r.kappa;
    j["words"] = r.words;
    j["dimension"] = r.dimension;
    j["generic_dimension"] = r.generic_dimension;
    j["zero_words"] = r.zero_words;
    Json nulls = Json::array();
    for (const auto& nv : r.null_vectors) {
        Json c = Json::array();
        for (const auto& [w, a] : nv.combination) c.push_back({{"word", w}, {"coeff", scalar_to_json(a)}});
        nulls.push_back(c);
    }
    j["null_vectors"] = nulls;
    Json sing = Json::array();
    for (const auto& e : r.singular_vectors) sing.push_back(element_to_json(e));
    j["singular_vectors"] = sing;
    return j;
}

Json mobius_report_to_json(const MobiusReport& r) {
    Json j;
    auto one = [](const Element& e) {
        return Json{{"pass", e.is_zero()}, {"residual", element_to_json(e)}};
    };
    j["translation"] = one(r.translation);
    j["dilatation"] = one(r.dilatation);
    j["special_conformal"] = one(r.special_conformal);
    return j;
}

} // namespace slevir
