#pragma once

#include <string>
#include <vector>

namespace oddsl2 {

struct CheckResult {
    std::string name;
    bool passed;
    double seconds;
};

// Run the library's invariant suite. `quick` trims the most expensive checks
// (regular-representation decomposition, big cyclotomic tables).
std::vector<CheckResult> run_verification(bool quick);

} // namespace oddsl2
