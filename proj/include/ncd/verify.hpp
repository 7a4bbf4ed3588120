#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncd {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Runs the invariant suite for NC^d_n at desk scale: duality identities,
// poset structure, counting formulas, tree and chain bijections, EL property
// and antipode equality. The seed drives the randomized series checks.
std::vector<CheckResult> run_verification(int n, int d, std::uint64_t seed,
                                          long long element_budget);

} // namespace ncd
