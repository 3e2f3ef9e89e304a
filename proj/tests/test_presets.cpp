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

#include "gvrepair/presets.hpp"
#include "support.hpp"

namespace gvr {
namespace {

TEST(Presets, TableMatchesGolden)
{
    EXPECT_EQ(presets_markdown(), testing::read_file(testing::source_dir() / "tests" / "golden" / "presets.md"));
}

TEST(Presets, Fields)
{
    EXPECT_EQ(preset("jkali").operator_space, "Suppression");
    EXPECT_EQ(preset("jkali").point_selection, SelectionStrategy::Sequential);
    EXPECT_EQ(preset("cardumen").granularity, Granularity::Expression);
    EXPECT_EQ(preset("jgenprog").ingredient_transform, IngredientTransform::None);
    EXPECT_EQ(preset("jmutrepair").granularity, Granularity::LogicalRelational);
    EXPECT_EQ(preset("deeprepair-lite").ingredient_selection, IngredientSelection::Similarity);
    EXPECT_EQ(preset("tibra").ingredient_transform, IngredientTransform::RandomVar);
    EXPECT_FALSE(preset("cardumen").operator_selection.has_value());
    EXPECT_THROW(preset("minimpact"), std::invalid_argument);
}

TEST(Presets, EngineConfigsAreConstructible)
{
    auto bug = testing::load_bug("abs-sign");
    ASSERT_EQ(all_presets().size(), 6u);
    for (const auto& p : all_presets()) {
        EngineConfig c = p.engine_config();
        EXPECT_EQ(c.navigation, p.navigations.front()) << p.name;
        EXPECT_EQ(c.operator_space, p.operator_space);
        EXPECT_NO_THROW(RepairEngine(bug.project, bug.suite, c)) << p.name;
    }
}

}  // namespace
}  // namespace gvr
