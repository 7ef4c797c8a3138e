// Acceptance harness: runs every verification check, aggregates them into the
// eight headline criteria, and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "pidisc/verify.hpp"

namespace {

const char* criterion_title(int n) {
    switch (n) {
        case 1: return "matrix-order example: level-4 ideal and level-5 vanishing";
        case 2: return "quantum-affine example: MD_4 and MD_3 monomial ideals";
        case 3: return "quantized Weyl discriminant closed form";
        case 4: return "Azumaya locus = complement of the top discriminant zero set";
        case 5: return "level stratification by semisimple dimension";
        case 6: return "reduced-trace integer decomposition";
        case 7: return "randomized property suites (exact)";
        case 8: return "singular points lie inside the discriminant locus";
    }
    return "?";
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    std::vector<pidisc::verify::CheckResult> checks;
    try {
        checks = pidisc::verify::run_checks("all", 0);
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance harness crashed: %s\n", e.what());
        return 1;
    }

    std::map<int, std::pair<int, int>> tally; // criterion -> (passed, total)
    for (const auto& c : checks) {
        auto& t = tally[c.criterion];
        t.second += 1;
        if (c.pass) t.first += 1;
    }

    int failed_criteria = 0;
    for (const auto& [criterion, counts] : tally) {
        bool pass = counts.first == counts.second;
        if (!pass) ++failed_criteria;
        std::printf("[%s] criterion %d: %s (%d/%d checks)\n", pass ? "PASS" : "FAIL", criterion,
                    criterion_title(criterion), counts.first, counts.second);
        for (const auto& c : checks) {
            if (c.criterion != criterion) continue;
            std::printf("    %s %-42s %s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                        c.detail.c_str());
        }
    }

    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(tally.size()) - failed_criteria,
                tally.size(), secs);
    return failed_criteria == 0 ? 0 : 1;
}
