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


#include <gtest/gtest.h>

#include "gvrepair/engine.hpp"
#include "support.hpp"

namespace gvr {
namespace {

using testing::find_printed;
using testing::load_bug;

OperatorPtr op_named(const std::string& space, const std::string& name)
{
    for (const auto& op : space_by_name(space).operators)
        if (op->name() == name) return op;
    throw std::invalid_argument(name);
}

Transformation make(const Project& p, const std::string& space, const std::string& op, const std::string& printed,
                    std::optional<Node> ingredient = std::nullopt)
{
    NodeId id = find_printed(p, printed);
    EXPECT_NE(id, 0u) << printed;
    return {{id, id, Granularity::Statement, 1.0}, op_named(space, op), std::move(ingredient)};
}

TEST(Validate, BuggyFitnessCountsFailingTests)
{
    auto bug = load_bug("abs-sign");
    Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
    EXPECT_EQ(base.failing, 3u);
    // failing tests run first
    EXPECT_EQ(base.order, (std::vector<std::size_t>{0, 1, 3, 2}));
    auto r = validate_variant(bug.project, bug.suite, base, false);
    EXPECT_EQ(fitness(r), 3u);
    EXPECT_EQ(r.executed, 4u);
    auto quick = validate_variant(bug.project, bug.suite, base, true);
    EXPECT_TRUE(quick.short_circuited);
    EXPECT_EQ(quick.executed, 1u);
}

TEST(Validate, PlantedFixHasFitnessZero)
{
    for (const auto& name : testing::corpus_names()) {
        auto bug = load_bug(name);
        Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
        Project fixed = testing::fixed_project(name);
        EXPECT_EQ(fitness(validate_variant(fixed, bug.suite, base, false)), 0u) << name;
        EXPECT_TRUE(is_adequate(fixed, bug.suite, base)) << name;
    }
}

TEST(Validate, EmptyTransformationListIsTheBuggyProgram)
{
    auto bug = load_bug("abs-sign");
    auto same = materialize(bug.project, {});
    ASSERT_TRUE(same);
    EXPECT_EQ(printed_sources(*same), printed_sources(bug.project));
    Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
    EXPECT_EQ(fitness(validate_variant(*same, bug.suite, base, false)), base.failing);
}

TEST(Validate, NonTerminatingVariantFails)
{
    auto bug = load_bug("abs-sign");
    Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
    for (auto b : base.budgets) EXPECT_GE(b, kMinTestBudget);
    auto t = make(bug.project, "IRR-statements", "insert-before", "return r;", parse_statement("while (true) { r = r; }"));
    auto looping = materialize(bug.project, {t});
    ASSERT_TRUE(looping);
    auto r = validate_variant(*looping, bug.suite, base, false);
    EXPECT_EQ(fitness(r), 4u);
}

TEST(Validate, TransformationsApplyInOrder)
{
    auto bug = load_bug("abs-sign");
    auto first = make(bug.project, "IRR-statements", "insert-before", "return r;", parse_statement("r = 1;"));
    auto second = make(bug.project, "IRR-statements", "insert-before", "return r;", parse_statement("r = 2;"));
    auto a = materialize(bug.project, {first, second});
    auto b = materialize(bug.project, {second, first});
    ASSERT_TRUE(a && b);
    Interpreter ia(*a), ib(*b);
    EXPECT_EQ(std::get<NormalOutcome>(ia.run("abs_value", {Value(5)}, 1000).outcome).value, Value(2));
    EXPECT_EQ(std::get<NormalOutcome>(ib.run("abs_value", {Value(5)}, 1000).outcome).value, Value(1));
}

TEST(Validate, MinimizationDropsNeutralEdits)
{
    auto bug = load_bug("abs-sign");
    Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
    auto neutral = make(bug.project, "IRR-statements", "insert-before", "return r;", parse_statement("r = r;"));
    NodeId cond = find_printed(bug.project, "x > 0");
    Transformation fix{{cond, find_printed(bug.project, "if (x > 0) {\n    r = -x;\n}"), Granularity::LogicalRelational, 1.0},
                       op_named("Relational-Logical-op", "rel:>-><"), std::nullopt};
    std::vector<Solution> sols = {{{neutral, fix}, 4}};

    auto patches = refine_patches(bug.project, bug.suite, base, sols);
    ASSERT_EQ(patches.size(), 1u);
    EXPECT_EQ(patches[0].transformations.size(), 1u);
    EXPECT_EQ(patches[0].removed, 1u);
    EXPECT_EQ(patches[0].iteration, 4u);
    ASSERT_EQ(patches[0].files.size(), 1u);
    EXPECT_EQ(patches[0].files[0].hunks.size(), 1u);
    EXPECT_EQ(patches[0].diff, testing::read_file(testing::corpus_dir() / "abs-sign" / "expected_fix.patch"));

    auto unminimized = refine_patches(bug.project, bug.suite, base, sols, {false});
    ASSERT_EQ(unminimized.size(), 1u);
    EXPECT_EQ(unminimized[0].transformations.size(), 2u);

    // duplicates and inadequate solutions are dropped
    auto dup = refine_patches(bug.project, bug.suite, base, {{{fix}, 1}, {{neutral, fix}, 2}, {{neutral}, 3}});
    ASSERT_EQ(dup.size(), 1u);
    EXPECT_EQ(dup[0].order, 1u);
}

TEST(Validate, MinimizationRepeatsUntilNothingDrops)
{
    auto bug = load_bug("abs-sign");
    Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
    NodeId cond = find_printed(bug.project, "x > 0");
    Transformation fix{{cond, find_printed(bug.project, "if (x > 0) {\n    r = -x;\n}"), Granularity::LogicalRelational, 1.0},
                       op_named("Relational-Logical-op", "rel:>-><"), std::nullopt};
    // `use` needs `decl`, so `decl` only becomes removable once `use` is gone
    auto decl = make(bug.project, "IRR-statements", "insert-before", "return r;", parse_statement("let k = 0;"));
    auto use = make(bug.project, "IRR-statements", "insert-before", "return r;", parse_statement("r = r + k;"));
    auto patches = refine_patches(bug.project, bug.suite, base, {{{fix, decl, use}, 1}});
    ASSERT_EQ(patches.size(), 1u);
    ASSERT_EQ(patches[0].transformations.size(), 1u);
    EXPECT_EQ(patches[0].transformations[0].op->name(), "rel:>-><");
    EXPECT_EQ(patches[0].removed, 2u);
}

TEST(Validate, PatchRoundTrip)
{
    for (const auto& name : testing::corpus_names()) {
        auto bug = load_bug(name);
        auto before = printed_sources(bug.project);
        auto after = printed_sources(testing::fixed_project(name));
        std::vector<FileDiff> files;
        for (const auto& [path, text] : before) {
            auto d = diff_texts(path, text, after.at(path));
            if (!d.hunks.empty()) files.push_back(std::move(d));
        }
        std::string patch = format_unified(files);
        EXPECT_EQ(apply_patch(before, patch), after) << name;
        EXPECT_EQ(parse_unified(patch).size(), files.size());
    }
}

TEST(Diff, ParsesHunkHeadersWithoutCounts)
{
    std::string patch = "--- a/x.mini\n+++ b/x.mini\n@@ -2 +2 @@\n-b\n+B\n";
    auto files = parse_unified(patch);
    ASSERT_EQ(files.size(), 1u);
    EXPECT_EQ(files[0].path, "x.mini");
    ASSERT_EQ(files[0].hunks.size(), 1u);
    EXPECT_EQ(files[0].hunks[0].old_count, 1u);
    EXPECT_EQ(apply_diff("a\nb\nc\n", files[0]), "a\nB\nc\n");
}

TEST(Diff, RejectsMismatchedContext)
{
    auto files = parse_unified("--- a/x.mini\n+++ b/x.mini\n@@ -1,2 +1,2 @@\n a\n-b\n+B\n");
    EXPECT_THROW(apply_diff("a\nz\n", files[0]), std::runtime_error);
}

}  // namespace
}  // namespace gvr
