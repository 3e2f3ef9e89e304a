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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/types.hpp"

namespace gvr {

enum class Granularity { Statement, Expression, LogicalRelational };

std::string_view to_string(Granularity g);
Granularity granularity_from_string(std::string_view name);

/// Read-only view of the program an operator works on.
struct OperatorContext {
    explicit OperatorContext(const Project& p) : project(p), index(p), types(p) {}

    const Project& project;
    ProjectIndex index;
    TypeContext types;
};

/// A code transformation applicable at a modification point. Operators are
/// stateless and pure: they never modify the project they are given.
class RepairOperator {
public:
    RepairOperator(std::string name, Granularity target, bool needs_ingredient)
        : name_(std::move(name)), target_(target), needs_ingredient_(needs_ingredient)
    {
    }
    virtual ~RepairOperator() = default;

    const std::string& name() const { return name_; }
    Granularity target_granularity() const { return target_; }
    bool needs_ingredient() const { return needs_ingredient_; }

    /// Structural precondition at `target`, ignoring any ingredient.
    virtual bool accepts(const OperatorContext& ctx, NodeId target) const = 0;

    /// The nodes that replace `target` (empty = deletion), or nullopt when
    /// not applicable. New nodes carry id 0.
    virtual std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target,
                                                     const Node* ingredient) const = 0;

    /// rewrite() followed by splicing the result into a copy of the project.
    std::optional<Project> apply(const OperatorContext& ctx, NodeId target, const Node* ingredient = nullptr) const;

private:
    std::string name_;
    Granularity target_;
    bool needs_ingredient_;
};

using OperatorPtr = std::shared_ptr<const RepairOperator>;

struct OperatorSpace {
    std::string name;
    std::vector<OperatorPtr> operators;  // order is significant for sequential selection
};

/// insert-before, replace, remove.
OperatorSpace space_irr_statements();
/// Every relational operator to each other one, && <-> ||, negation of
/// logical expressions and removal of `!`.
OperatorSpace space_relational_logical();
/// remove-statement, insert-return, if-true, if-false.
OperatorSpace space_suppression();
/// replace-expression.
OperatorSpace space_r_expression();

/// Looks up a space by its config name: IRR-statements, Relational-Logical-op,
/// Suppression, R-expression. Throws std::invalid_argument.
OperatorSpace space_by_name(std::string_view name);

/// Default value statement for insert-return, or nullopt if `type` has none.
std::optional<Node> default_return(const Type& type);

/// True if the expression lies on the left side of an assignment.
bool in_assignment_target(const ProjectIndex& index, NodeId id);

/// True if every free variable of `ingredient` is visible at `target`.
bool ingredient_in_scope(const OperatorContext& ctx, NodeId target, const Node& ingredient);

}  // namespace gvr
