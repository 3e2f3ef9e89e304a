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

#include "gvrepair/variant.hpp"

#include "gvrepair/printer.hpp"

namespace gvr {

std::string Transformation::describe() const
{
    std::string out = op->name() + "@" + std::to_string(point.target);
    if (ingredient) {
        out += ": ";
        out += is_statement(ingredient->kind) ? print_statement(*ingredient) : print_expression(*ingredient);
    }
    return out;
}

std::optional<Project> apply_transformation(const OperatorContext& base, const Transformation& t)
{
    return t.op->apply(base, t.point.target, t.ingredient ? &*t.ingredient : nullptr);
}

std::optional<Project> apply_transformation(const Project& base, const Transformation& t)
{
    OperatorContext ctx(base);
    return apply_transformation(ctx, t);
}

std::optional<Project> materialize(const Project& buggy, const std::vector<Transformation>& transformations)
{
    Project current = buggy;
    for (const auto& t : transformations) {
        auto next = apply_transformation(current, t);
        if (!next) return std::nullopt;
        current = std::move(*next);
    }
    return current;
}

std::string program_key(const Project& project)
{
    std::string key;
    for (const auto& f : project.files) {
        key += "//@ " + f.path + "\n";
        key += print_file(f);
    }
    return key;
}

}  // namespace gvr
