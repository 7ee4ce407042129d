#ifndef SYDLAB_SUITES_HPP
#define SYDLAB_SUITES_HPP

#include <string>
#include <vector>

namespace sydlab {

struct RunConfig {
    // Truncation for pure series identities.
    int truncation_order1 = 60;
    // Total degree for the bivariate orbit-weight product.
    int truncation_order2 = 14;
    int weyl_rank_bound = 7;
    int atlas_rank_bound = 12;
    // Throws std::invalid_argument unless every bound is at least 1.
    void validate() const;
};

struct CheckResult {
    std::string suite;
    std::string check;
    bool passed = false;
    std::string detail;
};

// appendixC, counting, weyl, richardson, atlas, all.
const std::vector<std::string>& suite_names();

// Checks in a fixed order. Throws std::invalid_argument for unknown suites.
std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& config);

} // namespace sydlab

#endif
