#include "slevir/geometry/geometry_json.hpp"

#include "slevir/algebra/errors.hpp"

#include <iomanip>
#include <sstream>

namespace slevir {

std::vector<GeometryRecord> geometry_sweep(int N, int L, const std::vector<double>& points, double kappa,
                                           const QuadratureSpec& spec, bool residuals, bool exponents) {
    std::vector<GeometryRecord> rows;
    int id = 0;
    for (const auto& p : enumerate_configs(N, L)) {
        GeometryRecord row;
        row.config_id = id++;
        row.config = p;
        row.walk = walk_encoding(config_to_walk(p));
        row.points = points;
        row.kappa = kappa;
        try {
            row.Z = feigin_fuchs_Z(p, points, kappa, spec);
            if (residuals)
                for (int I = 1; I <= N; ++I) row.residuals.push_back(null_field_residual(p, points, kappa, I, spec).residual);
            if (exponents)
                for (int I = 1; I < N; ++I) {
                    auto fit = asymptotic_exponent(p, points, kappa, I, spec);
                    row.exponents.push_back(fit.reliable ? std::optional<double>(fit.slope) : std::nullopt);
                }
        } catch (const Error& e) {
            row.error = e.code() + ": " + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json geometry_to_json(const std::vector<GeometryRecord>& rows) {
    nlohmann::json out;
    out["schema"] = "slevir.geometry.v1";
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["config_id"] = r.config_id;
        j["N"] = r.config.N;
        j["pairs"] = r.config.pairs;
        j["walk"] = r.walk;
        j["points"] = r.points;
        j["kappa"] = r.kappa;
        j["Z"] = r.Z ? nlohmann::json(*r.Z) : nlohmann::json(nullptr);
        j["residuals"] = r.residuals;
        j["exponents"] = nlohmann::json::array();
        for (auto& e : r.exponents) j["exponents"].push_back(e ? nlohmann::json(*e) : nlohmann::json(nullptr));
        if (!r.error.empty()) j["error"] = r.error;
        out["rows"].push_back(j);
    }
    return out;
}

std::string geometry_to_csv(const std::vector<GeometryRecord>& rows) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "config_id,walk,points,kappa,Z,residuals,exponents,error\n";
    auto join = [&](auto const& v, auto fmt) {
        std::ostringstream s;
        s << std::setprecision(17);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s << ';';
            fmt(s, v[i]);
        }
        return s.str();
    };
    auto num = [](std::ostream& s, double v) { s << v; };
    auto opt = [](std::ostream& s, const std::optional<double>& v) {
        if (v) s << *v;
    };
    for (const auto& r : rows) {
        os << r.config_id << ',' << r.walk << ',' << join(r.points, num) << ',' << r.kappa << ',';
        if (r.Z) os << *r.Z;
        os << ',' << join(r.residuals, num) << ',' << join(r.exponents, opt) << ',';
        std::string err = r.error;
        for (char& c : err)
            if (c == ',' || c == '\n') c = ' ';
        os << err << '\n';
    }
    return os.str();
}

nlohmann::json configs_to_json(int N, int L) {
    nlohmann::json out;
    out["schema"] = "slevir.configs.v1";
    out["N"] = N;
    out["L"] = L;
    out["count"] = config_count(N, L);
    out["configs"] = nlohmann::json::array();
    int id = 0;
    for (const auto& p : enumerate_configs(N, L)) {
        auto w = config_to_walk(p);
        out["configs"].push_back({{"config_id", id++}, {"pairs", p.pairs}, {"walk", w}, {"steps", walk_encoding(w)}});
    }
    return out;
}

} // namespace slevir
