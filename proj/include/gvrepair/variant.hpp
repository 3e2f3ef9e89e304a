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
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/operators.hpp"

namespace gvr {

/// A suspicious code element that may be transformed.
struct ModificationPoint {
    NodeId target = 0;
    NodeId statement = 0;  // enclosing statement (the point itself at statement granularity)
    Granularity granularity = Granularity::Statement;
    double suspiciousness = 0.0;
};

struct Transformation {
    ModificationPoint point;
    OperatorPtr op;
    std::optional<Node> ingredient;

    /// Stable human-readable form, e.g. `replace@12: return solve(f, lo, hi);`.
    std::string describe() const;
};

/// A candidate program: the buggy program with `transformations` applied in
/// order.
struct ProgramVariant {
    std::size_t id = 0;
    std::vector<Transformation> transformations;
    Project project;
    std::optional<std::size_t> fitness;
    std::size_t generation = 0;
};

/// Applies one transformation to `base`; nullopt when not applicable.
std::optional<Project> apply_transformation(const Project& base, const Transformation& t);
std::optional<Project> apply_transformation(const OperatorContext& base, const Transformation& t);

/// Applies all transformations in order to the buggy project.
std::optional<Project> materialize(const Project& buggy, const std::vector<Transformation>& transformations);

/// All files printed back to back, used as identity of a program.
std::string program_key(const Project& project);

}  // namespace gvr
