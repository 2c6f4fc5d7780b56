#pragma once

#include <string>
#include <vector>

#include "rnfree/ints.hpp"

namespace rnfree::checks {

struct SuiteResult {
    std::string name;
    bool pass = false;
    u64 cases = 0;         // number of individual comparisons made
    std::string detail;    // first failure, empty when passing
};

struct IdentityOptions {
    u64 t_rmax = 2000; // T(r, n) identity range
    u64 t_nmax = 50;
    u64 qmax = 121;    // exhaustive field range for the character-sum suites
};

// The four identity suites: divisor-sum vs closed form of T(r, n), the
// (r,n)-free indicator vs the gcd test, both order-indicator forms vs the
// direct order test, and radical invariance of freeness.
std::vector<SuiteResult> run_identity_suites(const IdentityOptions& opts);

bool all_passed(const std::vector<SuiteResult>& results);

} // namespace rnfree::checks
