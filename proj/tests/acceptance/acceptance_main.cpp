// acceptance_main.cpp — runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include "gadgetforge/suite/criteria.hpp"

#include <cstdio>

int main() {
    using namespace gadgetforge::suite;
    const std::vector<CriterionResult> results = run_acceptance_suite({});
    bool all = true;
    for (const CriterionResult& r : results) {
        std::printf("%s  criterion %2d: %s  (%.2fs%s)\n", r.pass ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.runtime_seconds,
                    r.runtime_limit > 0 ? (", limit " + std::to_string(static_cast<int>(r.runtime_limit)) + "s").c_str()
                                        : "");
        if (!r.pass) {
            for (const auto& it : r.items)
                if (!it.pass)
                    std::printf("      failed: %s (residual %.3e, tol %.3e)\n", it.name.c_str(), it.residual,
                                it.tolerance);
        }
        all = all && r.pass;
    }
    std::printf("%s  acceptance suite: %zu criteria\n", all ? "PASS" : "FAIL", results.size());
    return all ? 0 : 1;
}
