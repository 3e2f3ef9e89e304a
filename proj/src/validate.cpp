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

#include "gvrepair/validate.hpp"

#include <algorithm>
#include <set>

#include "gvrepair/printer.hpp"
#include "gvrepair/types.hpp"

namespace gvr {

Baseline compute_baseline(const Project& buggy, const TestSuite& suite, std::uint64_t step_budget)
{
    Baseline b;
    Interpreter interp(buggy);
    for (const auto& test : suite) {
        auto trace = interp.run(test.entry, test.args, step_budget);
        bool pass = test_passes(test, trace.outcome);
        b.status.push_back(pass ? TestStatus::Pass : TestStatus::Fail);
        b.steps.push_back(trace.steps);
        bool timed_out = std::holds_alternative<TimeoutOutcome>(trace.outcome);
        std::uint64_t budget = timed_out ? step_budget : std::max(kMinTestBudget, kBudgetFactor * trace.steps);
        b.budgets.push_back(std::min(budget, step_budget));
        if (!pass) ++b.failing;
    }
    for (std::size_t i = 0; i < suite.size(); ++i)
        if (b.status[i] == TestStatus::Fail) b.order.push_back(i);
    for (std::size_t i = 0; i < suite.size(); ++i)
        if (b.status[i] == TestStatus::Pass) b.order.push_back(i);
    return b;
}

ValidationResult validate_variant(const Project& variant, const TestSuite& suite, const Baseline& baseline,
                                  bool short_circuit)
{
    ValidationResult r;
    r.status.assign(suite.size(), TestStatus::Skipped);
    Interpreter interp(variant);
    for (std::size_t i : baseline.order) {
        const auto& test = suite[i];
        auto trace = interp.run(test.entry, test.args, baseline.budgets[i]);
        r.steps += trace.steps;
        ++r.executed;
        bool pass = test_passes(test, trace.outcome);
        r.status[i] = pass ? TestStatus::Pass : TestStatus::Fail;
        if (!pass) {
            ++r.failing;
            if (short_circuit && baseline.status[i] == TestStatus::Fail) {
                r.short_circuited = r.executed < suite.size();
                break;
            }
        }
    }
    return r;
}

std::size_t fitness(const ValidationResult& result) { return result.failing; }

bool is_adequate(const Project& variant, const TestSuite& suite, const Baseline& baseline)
{
    if (check_project(variant)) return false;
    return fitness(validate_variant(variant, suite, baseline, false)) == 0;
}

std::map<std::string, std::string> printed_sources(const Project& project)
{
    std::map<std::string, std::string> out;
    for (const auto& f : project.files) out[f.path] = print_file(f);
    return out;
}

std::vector<Patch> refine_patches(const Project& buggy, const TestSuite& suite, const Baseline& baseline,
                                  const std::vector<Solution>& solutions, const RefineOptions& options)
{
    const auto before = printed_sources(buggy);
    std::vector<Patch> out;
    std::set<std::string> seen;
    for (const auto& sol : solutions) {
        auto variant = materialize(buggy, sol.transformations);
        if (!variant || !is_adequate(*variant, suite, baseline)) continue;

        std::vector<Transformation> kept = sol.transformations;
        // Greedy passes until no single transformation can be dropped; one
        // pass is not enough once a later drop frees an earlier edit.
        for (bool changed = options.minimize; changed && kept.size() > 1;) {
            changed = false;
            for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
                auto without = kept;
                without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
                auto candidate = materialize(buggy, without);
                if (candidate && is_adequate(*candidate, suite, baseline)) {
                    kept = std::move(without);
                    variant = std::move(candidate);
                    changed = true;
                } else {
                    ++i;
                }
            }
        }

        Patch p;
        p.removed = sol.transformations.size() - kept.size();
        p.transformations = std::move(kept);
        p.iteration = sol.iteration;
        const auto after = printed_sources(*variant);
        for (const auto& [path, text] : before) {
            auto d = diff_texts(path, text, after.at(path));
            if (!d.hunks.empty()) p.files.push_back(std::move(d));
        }
        p.diff = format_unified(p.files);
        if (p.diff.empty() || !seen.insert(p.diff).second) continue;
        p.order = out.size() + 1;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace gvr
