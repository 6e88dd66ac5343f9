// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Scopes and tolerances are pinned here; everything is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "kroncoeff/verify.hpp"

namespace {

struct Criterion {
    const char* label;
    std::function<std::vector<kroncoeff::SuiteResult>()> run;
};

} // namespace

int main() {
    using namespace kroncoeff;
    const std::vector<Criterion> criteria = {
        {"criterion 1 cross-method equivalence, n <= 7",
         [] { return std::vector<SuiteResult>{suite_method_equivalence(7)}; }},
        {"criterion 2 reduction fidelity, n <= 10, nu1 >= n/2",
         [] { return std::vector<SuiteResult>{suite_reduction(10)}; }},
        {"criterion 3 reduction example replay",
         [] { return std::vector<SuiteResult>{suite_example_replay()}; }},
        {"criterion 4 hook rule vs oracle, n <= 8",
         [] { return std::vector<SuiteResult>{suite_hook_rule(8)}; }},
        {"criterion 5 tableau switching, shapes <= 6",
         [] { return std::vector<SuiteResult>{suite_switching(6)}; }},
        {"criterion 6 S3 and conjugation symmetries, n <= 7",
         [] {
             return std::vector<SuiteResult>{suite_s3_symmetry(7),
                                             suite_conjugation_symmetry(7)};
         }},
        {"criterion 7 GapP decomposition, n <= 6",
         [] { return std::vector<SuiteResult>{suite_gapp(6)}; }},
        {"criterion 8 two-row characters, n <= 10",
         [] { return std::vector<SuiteResult>{suite_two_row(10)}; }},
        {"criterion 9 contingency counts, l <= 3, entries <= 4",
         [] { return std::vector<SuiteResult>{suite_contingency(3, 4)}; }},
        {"criterion 10 LR suite <= 6 with stabilization <= 4",
         [] {
             return std::vector<SuiteResult>{suite_lr(6), suite_stabilization(4)};
         }},
        {"criterion 11 semigroup property, 200 pairs, n <= 6",
         [] { return std::vector<SuiteResult>{suite_semigroup(200, 6)}; }},
        {"criterion 12 Littlewood cross-identity, n <= 6, r <= 2",
         [] { return std::vector<SuiteResult>{suite_littlewood(6, 2)}; }},
    };

    bool all_passed = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto results = c.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = true;
        int64_t cases = 0;
        std::string detail;
        for (const auto& r : results) {
            cases += r.cases;
            if (!r.passed) {
                passed = false;
                detail = r.name + ": " + r.counterexample;
            }
        }
        if (passed) {
            std::printf("PASS %s (%lld checks, %.1fs)\n", c.label,
                        static_cast<long long>(cases), secs);
        } else {
            all_passed = false;
            std::printf("FAIL %s (%lld checks, %.1fs) %s\n", c.label,
                        static_cast<long long>(cases), secs, detail.c_str());
        }
        std::fflush(stdout);
    }
    return all_passed ? 0 : 1;
}
