// Acceptance suite: runs every criterion of the validation checklist at its
// pinned tolerance and prints one PASS/FAIL line per criterion.
#include <cstdio>

#include "ptdirac/report.hpp"

int main() {
    auto result = ptdirac::report::run_validation({});
    for (const auto& c : result.checks) {
        std::printf("%s  criterion %2d: %s", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str());
        if (!c.detail.empty()) std::printf("  [%s]", c.detail.c_str());
        std::printf("\n");
    }
    std::printf("%s (%.1f s)\n", result.all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED",
                result.elapsed_seconds);
    return result.all_pass ? 0 : 1;
}
