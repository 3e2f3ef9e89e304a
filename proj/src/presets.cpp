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

#include "gvrepair/presets.hpp"

#include <functional>
#include <stdexcept>

namespace gvr {

namespace {

using Nav = Navigation;
using Sel = SelectionStrategy;

std::vector<ApproachPreset> make_presets()
{
    const std::string fl = "spectrum (Ochiai)";
    std::vector<ApproachPreset> p;
    p.push_back({"jgenprog", fl, Granularity::Statement, "statement", {Nav::Evolutionary, Nav::Selective},
                 Sel::Weighted, "IRR-statements", Sel::Uniform, IngredientScope::Module, IngredientSelection::Uniform,
                 IngredientTransform::None});
    p.push_back({"jkali", fl, Granularity::Statement, "statement + if", {Nav::Exhaustive}, Sel::Sequential,
                 "Suppression", Sel::Sequential, std::nullopt, std::nullopt, std::nullopt});
    p.push_back({"jmutrepair", fl, Granularity::LogicalRelational, "logical-relational",
                 {Nav::Exhaustive, Nav::Selective}, Sel::Weighted, "Relational-Logical-op", Sel::Uniform,
                 std::nullopt, std::nullopt, std::nullopt});
    p.push_back({"deeprepair-lite", fl, Granularity::Statement, "statement", {Nav::Evolutionary, Nav::Selective},
                 Sel::Weighted, "IRR-statements", Sel::Uniform, IngredientScope::Module,
                 IngredientSelection::Similarity, IngredientTransform::NameCluster});
    p.push_back({"cardumen", fl, Granularity::Expression, "expression", {Nav::Selective}, Sel::Weighted,
                 "R-expression", std::nullopt, IngredientScope::Global, IngredientSelection::Uniform,
                 IngredientTransform::NameProbability});
    p.push_back({"tibra", fl, Granularity::Statement, "statement", {Nav::Selective}, Sel::Weighted, "IRR-statements",
                 Sel::Uniform, IngredientScope::Module, IngredientSelection::Uniform, IngredientTransform::RandomVar});
    return p;
}

std::string navigations_label(const std::vector<Navigation>& navs)
{
    std::string out;
    for (std::size_t i = 0; i < navs.size(); ++i) {
        if (i > 0) out += " or ";
        out += to_string(navs[i]);
        if (i == 0 && navs.size() > 1) out += " (default)";
    }
    return out;
}

template <class T>
std::string opt_label(const std::optional<T>& v)
{
    return v ? std::string(to_string(*v)) : "-";
}

}  // namespace

EngineConfig ApproachPreset::engine_config() const
{
    EngineConfig c;
    c.granularity = granularity;
    c.navigation = navigations.front();
    c.point_selection = point_selection;
    c.operator_space = operator_space;
    c.operator_selection = operator_selection.value_or(SelectionStrategy::Sequential);
    if (ingredient_scope) c.ingredient_scope = *ingredient_scope;
    if (ingredient_selection) c.ingredient_selection = *ingredient_selection;
    if (ingredient_transform) c.ingredient_transform = *ingredient_transform;
    return c;
}

const std::vector<ApproachPreset>& all_presets()
{
    static const std::vector<ApproachPreset> presets = make_presets();
    return presets;
}

const ApproachPreset& preset(std::string_view name)
{
    for (const auto& p : all_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown preset: " + std::string(name));
}

std::string presets_markdown()
{
    const auto& presets = all_presets();
    using Row = std::pair<std::string, std::function<std::string(const ApproachPreset&)>>;
    const std::vector<Row> rows = {
        {"Fault localization", [](const ApproachPreset& p) { return p.fault_localization; }},
        {"Granularity", [](const ApproachPreset& p) { return p.granularity_label; }},
        {"Navigation", [](const ApproachPreset& p) { return navigations_label(p.navigations); }},
        {"Point selection", [](const ApproachPreset& p) { return std::string(to_string(p.point_selection)); }},
        {"Operator space", [](const ApproachPreset& p) { return p.operator_space; }},
        {"Operator selection", [](const ApproachPreset& p) { return opt_label(p.operator_selection); }},
        {"Ingredient pool", [](const ApproachPreset& p) { return opt_label(p.ingredient_scope); }},
        {"Ingredient selection", [](const ApproachPreset& p) { return opt_label(p.ingredient_selection); }},
        {"Ingredient transformation", [](const ApproachPreset& p) { return opt_label(p.ingredient_transform); }},
        {"Validation", [](const ApproachPreset& p) { return p.validation; }},
        {"Fitness", [](const ApproachPreset& p) { return p.fitness; }},
        {"Prioritization", [](const ApproachPreset& p) { return p.prioritization; }},
    };
    std::string out = "| Extension point |";
    for (const auto& p : presets) out += " " + p.name + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < presets.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& [label, cell] : rows) {
        out += "| " + label + " |";
        for (const auto& p : presets) out += " " + cell(p) + " |";
        out += "\n";
    }
    return out;
}

}  // namespace gvr
