#pragma once

#include "slevir/geometry/feigin_fuchs.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace slevir {

// One row of a pure-geometry sweep. Quantities that could not be computed are
// left empty and `error` says why.
struct GeometryRecord {
    int config_id = 0;  // position in enumerate_configs(N, L)
    PairingConfig config;
    std::string walk;
    std::vector<double> points;
    double kappa = 0;
    std::optional<double> Z;
    std::vector<double> residuals;         // null-field residual per curve
    std::vector<std::optional<double>> exponents;  // collapse of (I, I+1), I = 1..N-1
    std::string error;
};

std::vector<GeometryRecord> geometry_sweep(int N, int L, const std::vector<double>& points, double kappa,
                                           const QuadratureSpec& spec, bool residuals, bool exponents);

nlohmann::json geometry_to_json(const std::vector<GeometryRecord>& rows);
std::string geometry_to_csv(const std::vector<GeometryRecord>& rows);
nlohmann::json configs_to_json(int N, int L);

} // namespace slevir
