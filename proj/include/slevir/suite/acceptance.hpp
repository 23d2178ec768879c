#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace slevir {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;  // exceeding it fails the criterion
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240601;
    unsigned threads = 0;
};

// The twelve acceptance checks in order; `ids` restricts to a subset (1-based).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}, const std::vector<int>& ids = {});
CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
int criterion_count();
std::string criterion_name(int id);

// "PASS 03 golden-table (1.2 s / 10 s) detail"
std::string format_line(const CriterionResult& r);
nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& rs);

} // namespace slevir
