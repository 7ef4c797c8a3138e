#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pidisc {
namespace verify {

struct CheckResult {
    int criterion = 0; // 1..8
    std::string suite; // example1 | example2 | weyl | properties
    std::string name;
    bool pass = false;
    std::string detail;
};

// suite: all | example1 | example2 | weyl | properties
std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed);

} // namespace verify
} // namespace pidisc
