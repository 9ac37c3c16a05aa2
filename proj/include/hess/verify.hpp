#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hess/rootsys.hpp"

namespace hess {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;                 // short summary, e.g. counts
    std::vector<std::string> failures;  // first few failing cases
    std::vector<std::string> reports;   // informational, never failing
};

// The admissible simple types with rank <= max_rank, in family order.
std::vector<CartanType> admissible_types(int max_rank);

// Runs the whole acceptance battery (criteria 1..9). `jobs` fans per-type work
// out across threads; results and output ordering stay deterministic.
std::vector<CriterionResult> run_verification(int max_rank, int jobs = 1);

}  // namespace hess
