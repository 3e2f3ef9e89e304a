// Copyright 2026 The gvrepair Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/diff.hpp"
#include "gvrepair/interpreter.hpp"
#include "gvrepair/test_suite.hpp"
#include "gvrepair/variant.hpp"

namespace gvr {

enum class TestStatus : std::uint8_t { Pass, Fail, Skipped };

/// Results of the unmodified program, which fix the failing-first order and
/// the per-test step budgets used for variants.
struct Baseline {
    std::vector<TestStatus> status;
    std::vector<std::uint64_t> steps;
    std::vector<std::uint64_t> budgets;
    std::vector<std::size_t> order;  // originally failing tests first, then the rest
    std::size_t failing = 0;
};

/// Runs the suite on the buggy program. A test's budget is
/// max(kMinTestBudget, kBudgetFactor * its baseline steps), capped by
/// `step_budget`; tests that already time out keep the full budget.
Baseline compute_baseline(const Project& buggy, const TestSuite& suite, std::uint64_t step_budget);

inline constexpr std::uint64_t kMinTestBudget = 10'000;
inline constexpr std::uint64_t kBudgetFactor = 50;

struct ValidationResult {
    std::vector<TestStatus> status;  // per test, suite order
    std::size_t failing = 0;
    std::uint64_t steps = 0;
    std::size_t executed = 0;
    bool short_circuited = false;  // `failing` is then a lower bound
};

/// Runs the suite on a variant in failing-first order. With `short_circuit`
/// the run stops at the first originally-failing test that still fails.
ValidationResult validate_variant(const Project& variant, const TestSuite& suite, const Baseline& baseline,
                                  bool short_circuit);

/// Number of failing tests; 0 means a test-suite adequate variant.
std::size_t fitness(const ValidationResult& result);

/// A reported repair.
struct Patch {
    std::vector<Transformation> transformations;  // after minimization
    std::vector<FileDiff> files;
    std::string diff;
    std::size_t iteration = 0;
    std::size_t order = 0;  // discovery order, 1-based
    std::size_t removed = 0;  // transformations dropped by minimization
};

struct Solution {
    std::vector<Transformation> transformations;
    std::size_t iteration = 0;
};

struct RefineOptions {
    bool minimize = true;
};

/// Re-validates every solution with the full suite, greedily drops
/// transformations whose removal keeps fitness 0 (one pass, in order), and
/// emits unified diffs against the printed buggy sources. Solutions that
/// fail full validation are dropped; duplicates (same diff) keep the first.
/// Output is in chronological order.
std::vector<Patch> refine_patches(const Project& buggy, const TestSuite& suite, const Baseline& baseline,
                                  const std::vector<Solution>& solutions, const RefineOptions& options = {});

/// True when the variant is statically well-formed and passes every test.
bool is_adequate(const Project& variant, const TestSuite& suite, const Baseline& baseline);

/// Printed sources of each file, keyed by path.
std::map<std::string, std::string> printed_sources(const Project& project);

}  // namespace gvr
