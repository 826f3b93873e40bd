#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stair {

struct Violation {
    std::string check;
    std::string detail;
};

struct CheckSummary {
    long checks_run = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Deterministic given the seed; different seeds vary the sampled cases but
// must never change the outcome.
CheckSummary run_property_suite(std::uint64_t seed);

} // namespace stair
