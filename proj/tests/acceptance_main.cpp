// Acceptance gate: runs the ten regression criteria with a fixed seed and
// prints one PASS/FAIL line each.  Exit status is the number of failures.

#include <cstdio>

#include "localh/regress.hpp"

int main() {
    const std::uint64_t seed = 0;
    int failures = 0;
    for (const auto& r : localh::run_acceptance(seed)) {
        std::printf("C%-2d %s  %s\n", r.index, r.pass ? "PASS" : "FAIL", r.name.c_str());
        if (!r.pass) {
            ++failures;
            for (const auto& note : r.notes) std::printf("      %s\n", note.c_str());
        }
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
