#include "slevir/funcspace/element_json.hpp"

namespace slevir {

Json integer_to_json(const Integer& a) {
    if (a.fits_slong_p()) return Json(static_cast<int64_t>(a.get_si()));
    return Json(a.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw DomainError("expected an integer in JSON");
}

Json scalar_to_json(const ScalarK& s) {
    Json num = Json::array(), den = Json::array();
    for (const auto& c : s.num().coeffs()) num.push_back(integer_to_json(c));
    for (const auto& c : s.den().coeffs()) den.push_back(integer_to_json(c));
    return Json{{"num", num}, {"den", den}};
}

ScalarK scalar_from_json(const Json& j) {
    std::vector<Integer> n, d;
    for (const auto& c : j.at("num")) n.push_back(integer_from_json(c));
    for (const auto& c : j.at("den")) d.push_back(integer_from_json(c));
    return ScalarK::from_parts(UPolyZ(std::move(n)), UPolyZ(std::move(d)));
}

Json element_to_json(const Element& e) {
    Json terms = Json::array();
    for (const auto& b : e.blocks()) {
        Json pre = Json::array();
        for (const auto& [k, x] : b.pre)
            pre.push_back(Json{{"pair", Json::array({k.hi.name(), k.lo.name()})}, {"exp", scalar_to_json(x)}});
        for (auto it = b.poly.terms().rbegin(); it != b.poly.terms().rend(); ++it) {
            Json mono = Json::object();
            for (int s = 0; s < Var::kSlots; ++s) {
                Var v = Var::from_slot(s);
                if (it->first[v]) mono[v.name()] = it->first[v];
            }
            terms.push_back(Json{{"coeff", scalar_to_json(it->second)}, {"prefactor", pre}, {"monomial", mono}});
        }
    }
    return Json{{"terms", terms}};
}

Element element_from_json(const Json& j) {
    Element out;
    for (const auto& t : j.at("terms")) {
        Prefactor pre;
        for (const auto& p : t.at("prefactor")) {
            Var a = Var::parse(p.at("pair").at(0).get<std::string>());
            Var b = Var::parse(p.at("pair").at(1).get<std::string>());
            pre[PairKey{b, a}] += scalar_from_json(p.at("exp"));
        }
        Monomial m;
        for (const auto& [name, power] : t.at("monomial").items()) m.set(Var::parse(name), power.get<int>());
        out += Element::from_block(std::move(pre), PolyK::term(scalar_from_json(t.at("coeff")), m));
    }
    return out;
}

} // namespace slevir
