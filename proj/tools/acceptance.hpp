#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qtl::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    nlohmann::json detail;
};

struct Suite {
    int id;
    std::string name;
    std::string title;
};

// Criteria 1..10 in order.
const std::vector<Suite>& suites();

// Accepts a suite name or its number; throws qtl::Error(invalid_input) for an unknown name.
const Suite& find_suite(const std::string& name_or_id);

CriterionResult run(const Suite& s);

// Runtime is left out so the report is reproducible.
nlohmann::json to_json(const CriterionResult& r);

}  // namespace qtl::acceptance
