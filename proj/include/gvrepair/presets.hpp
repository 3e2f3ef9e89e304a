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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvrepair/engine.hpp"

namespace gvr {

/// One repair approach expressed as extension-point choices.
struct ApproachPreset {
    std::string name;
    std::string fault_localization;
    Granularity granularity;
    std::string granularity_label;  // as shown in the preset table
    std::vector<Navigation> navigations;  // supported; the first is the default
    SelectionStrategy point_selection;
    std::string operator_space;
    std::optional<SelectionStrategy> operator_selection;  // unset: single-operator space
    std::optional<IngredientScope> ingredient_scope;
    std::optional<IngredientSelection> ingredient_selection;
    std::optional<IngredientTransform> ingredient_transform;
    std::string validation = "test-suite";
    std::string fitness = "#failing-tests";
    std::string prioritization = "chronological";

    /// Engine configuration with this preset's choices and default budgets.
    EngineConfig engine_config() const;
};

/// jgenprog, jkali, jmutrepair, deeprepair-lite, cardumen, tibra.
const std::vector<ApproachPreset>& all_presets();

/// Throws std::invalid_argument("unknown preset: ...").
const ApproachPreset& preset(std::string_view name);

/// Markdown table: one row per extension point, one column per preset.
std::string presets_markdown();

}  // namespace gvr
