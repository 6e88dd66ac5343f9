#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kroncoeff {

struct SuiteResult {
    std::string name;
    int64_t cases = 0;
    bool passed = true;
    std::string counterexample; // first failure in enumeration order
};

// Cross-method and invariant suites. Each suite enumerates its cases in a
// fixed deterministic order and records the first counterexample; loops may
// run in parallel but the verdict and the reported counterexample do not
// depend on the schedule.
SuiteResult suite_method_equivalence(int max_n);
SuiteResult suite_s3_symmetry(int max_n);
SuiteResult suite_conjugation_symmetry(int max_n);
SuiteResult suite_gapp(int max_n);
SuiteResult suite_reduction(int max_n);
SuiteResult suite_two_row(int max_n);
SuiteResult suite_hook_rule(int max_n);
SuiteResult suite_switching(int max_shape);
SuiteResult suite_contingency(int max_len, int max_entry);
SuiteResult suite_example_replay();
SuiteResult suite_lr(int max_size);
SuiteResult suite_stabilization(int max_size);
SuiteResult suite_semigroup(int pairs, int max_n);
SuiteResult suite_littlewood(int max_n, int max_r);

/// Runs every suite with its scope clamped to max_n (shape and size caps
/// included). Deterministic.
std::vector<SuiteResult> run_verify(int max_n);

} // namespace kroncoeff
