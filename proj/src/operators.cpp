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

#include "gvrepair/operators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gvr {

std::string_view to_string(Granularity g)
{
    switch (g) {
    case Granularity::Statement: return "statement";
    case Granularity::Expression: return "expression";
    case Granularity::LogicalRelational: return "logical-relational";
    }
    return "?";
}

Granularity granularity_from_string(std::string_view name)
{
    if (name == "statement") return Granularity::Statement;
    if (name == "expression") return Granularity::Expression;
    if (name == "logical-relational") return Granularity::LogicalRelational;
    throw std::invalid_argument("unknown granularity: " + std::string(name));
}

std::optional<Project> RepairOperator::apply(const OperatorContext& ctx, NodeId target, const Node* ingredient) const
{
    if (needs_ingredient() && ingredient == nullptr) return std::nullopt;
    auto nodes = rewrite(ctx, target, ingredient);
    if (!nodes) return std::nullopt;
    return splice(ctx.project, target, std::move(*nodes));
}

namespace {

Node make_literal(Scalar value)
{
    Node n;
    n.kind = NodeKind::Literal;
    n.literal = std::move(value);
    return n;
}

Node fresh_copy(const Node& n)
{
    Node copy = n;
    clear_ids(copy);
    return copy;
}

// A non-block statement sitting directly in a block.
const NodeRef* block_statement(const OperatorContext& ctx, NodeId target)
{
    const NodeRef* ref = ctx.index.find(target);
    if (ref == nullptr || !is_statement(ref->node->kind) || ref->node->kind == NodeKind::Block) return nullptr;
    if (ref->parent == nullptr || ref->parent->kind != NodeKind::Block) return nullptr;
    return ref;
}

// Removing a declaration is only safe if nothing after it reads the variable.
bool removable(const NodeRef& ref)
{
    const Node& stmt = *ref.node;
    if (stmt.kind != NodeKind::VarDecl) return true;
    const auto& siblings = ref.parent->children;
    for (std::size_t i = ref.position + 1; i < siblings.size(); ++i) {
        auto free = free_variables(siblings[i]);
        if (std::find(free.begin(), free.end(), stmt.name) != free.end()) return false;
        if (siblings[i].kind == NodeKind::VarDecl && siblings[i].name == stmt.name) break;
    }
    return true;
}

class InsertBefore : public RepairOperator {
public:
    InsertBefore() : RepairOperator("insert-before", Granularity::Statement, true) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        return block_statement(ctx, target) != nullptr;
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target,
                                             const Node* ingredient) const override
    {
        const NodeRef* ref = block_statement(ctx, target);
        if (ref == nullptr || ingredient == nullptr || !is_statement(ingredient->kind) ||
            ingredient->kind == NodeKind::Block)
            return std::nullopt;
        if (!ingredient_in_scope(ctx, target, *ingredient)) return std::nullopt;
        return std::vector<Node>{fresh_copy(*ingredient), *ref->node};
    }
};

class ReplaceStatement : public RepairOperator {
public:
    ReplaceStatement() : RepairOperator("replace", Granularity::Statement, true) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = block_statement(ctx, target);
        return ref != nullptr;
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target,
                                             const Node* ingredient) const override
    {
        const NodeRef* ref = block_statement(ctx, target);
        if (ref == nullptr || ingredient == nullptr || !is_statement(ingredient->kind) ||
            ingredient->kind == NodeKind::Block)
            return std::nullopt;
        if (!ingredient_in_scope(ctx, target, *ingredient)) return std::nullopt;
        // dropping a declaration others depend on is only fine if the
        // replacement declares the same name
        if (!removable(*ref) && !(ingredient->kind == NodeKind::VarDecl && ingredient->name == ref->node->name))
            return std::nullopt;
        return std::vector<Node>{fresh_copy(*ingredient)};
    }
};

class RemoveStatement : public RepairOperator {
public:
    explicit RemoveStatement(std::string name) : RepairOperator(std::move(name), Granularity::Statement, false) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = block_statement(ctx, target);
        return ref != nullptr && removable(*ref);
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target, const Node*) const override
    {
        if (!accepts(ctx, target)) return std::nullopt;
        return std::vector<Node>{};
    }
};

class InsertReturn : public RepairOperator {
public:
    InsertReturn() : RepairOperator("insert-return", Granularity::Statement, false) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override { return make(ctx, target).has_value(); }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target, const Node*) const override
    {
        auto ret = make(ctx, target);
        if (!ret) return std::nullopt;
        return std::vector<Node>{std::move(*ret), *ctx.index.at(target).node};
    }

private:
    static std::optional<Node> make(const OperatorContext& ctx, NodeId target)
    {
        const NodeRef* ref = block_statement(ctx, target);
        if (ref == nullptr || ref->function == nullptr) return std::nullopt;
        return default_return(ctx.types.return_type(*ref->function));
    }
};

class ForceCondition : public RepairOperator {
public:
    explicit ForceCondition(bool value)
        : RepairOperator(value ? "if-true" : "if-false", Granularity::Statement, false), value_(value)
    {
    }
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = ctx.index.find(target);
        if (ref == nullptr || ref->node->kind != NodeKind::If) return false;
        const Node& cond = ref->node->children[0];
        bool already = cond.kind == NodeKind::Literal && std::holds_alternative<bool>(cond.literal) &&
                       std::get<bool>(cond.literal) == value_;
        return !already;
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target, const Node*) const override
    {
        if (!accepts(ctx, target)) return std::nullopt;
        Node copy = *ctx.index.at(target).node;
        copy.children[0] = make_literal(value_);
        return std::vector<Node>{std::move(copy)};
    }

private:
    bool value_;
};

class SwapBinary : public RepairOperator {
public:
    SwapBinary(std::string name, BinaryOp from, BinaryOp to)
        : RepairOperator(std::move(name), Granularity::LogicalRelational, false), from_(from), to_(to)
    {
    }
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = ctx.index.find(target);
        return ref != nullptr && ref->node->kind == NodeKind::Binary && ref->node->binary_op() == from_;
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target, const Node*) const override
    {
        if (!accepts(ctx, target)) return std::nullopt;
        Node copy = *ctx.index.at(target).node;
        copy.op = static_cast<std::uint8_t>(to_);
        return std::vector<Node>{std::move(copy)};
    }

private:
    BinaryOp from_;
    BinaryOp to_;
};

class InsertNegation : public RepairOperator {
public:
    InsertNegation() : RepairOperator("negate", Granularity::LogicalRelational, false) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = ctx.index.find(target);
        return ref != nullptr && ref->node->kind == NodeKind::Binary && is_logical(ref->node->binary_op());
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target, const Node*) const override
    {
        if (!accepts(ctx, target)) return std::nullopt;
        Node neg;
        neg.kind = NodeKind::Unary;
        neg.op = static_cast<std::uint8_t>(UnaryOp::Not);
        neg.children.push_back(*ctx.index.at(target).node);
        return std::vector<Node>{std::move(neg)};
    }
};

class RemoveNegation : public RepairOperator {
public:
    RemoveNegation() : RepairOperator("remove-negation", Granularity::LogicalRelational, false) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = ctx.index.find(target);
        return ref != nullptr && ref->node->kind == NodeKind::Unary && ref->node->unary_op() == UnaryOp::Not;
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target, const Node*) const override
    {
        if (!accepts(ctx, target)) return std::nullopt;
        return std::vector<Node>{ctx.index.at(target).node->children[0]};
    }
};

class ReplaceExpression : public RepairOperator {
public:
    ReplaceExpression() : RepairOperator("replace-expression", Granularity::Expression, true) {}
    bool accepts(const OperatorContext& ctx, NodeId target) const override
    {
        const NodeRef* ref = ctx.index.find(target);
        return ref != nullptr && is_expression(ref->node->kind) && !in_assignment_target(ctx.index, target);
    }
    std::optional<std::vector<Node>> rewrite(const OperatorContext& ctx, NodeId target,
                                             const Node* ingredient) const override
    {
        if (ingredient == nullptr || !is_expression(ingredient->kind) || !accepts(ctx, target)) return std::nullopt;
        if (!ingredient_in_scope(ctx, target, *ingredient)) return std::nullopt;
        Environment env = scope_at(ctx.index, ctx.types, target);
        Type want = ctx.types.infer(*ctx.index.at(target).node, env);
        Type got = ctx.types.infer(*ingredient, env);
        if (!compatible(want, got)) return std::nullopt;
        return std::vector<Node>{fresh_copy(*ingredient)};
    }
};

}  // namespace

bool in_assignment_target(const ProjectIndex& index, NodeId id)
{
    const NodeRef* ref = index.find(id);
    while (ref != nullptr && ref->parent != nullptr) {
        if (ref->parent->kind == NodeKind::Assign && ref->position == 0) return true;
        if (is_statement(ref->parent->kind)) return false;
        ref = index.find(ref->parent->id);
    }
    return false;
}

bool ingredient_in_scope(const OperatorContext& ctx, NodeId target, const Node& ingredient)
{
    Environment env = scope_at(ctx.index, ctx.types, target);
    for (const auto& name : free_variables(ingredient))
        if (!env.lookup(name)) return false;
    return true;
}

std::optional<Node> default_return(const Type& type)
{
    Node ret;
    ret.kind = NodeKind::Return;
    if (type.is_array()) {
        Node arr;
        arr.kind = NodeKind::ArrayLit;
        ret.children.push_back(std::move(arr));
        return ret;
    }
    switch (type.base) {
    case Type::Base::Void: return ret;
    case Type::Base::Int: ret.children.push_back(make_literal(std::int64_t{0})); return ret;
    case Type::Base::Float: ret.children.push_back(make_literal(0.0)); return ret;
    case Type::Base::Bool: ret.children.push_back(make_literal(false)); return ret;
    case Type::Base::String: ret.children.push_back(make_literal(std::string())); return ret;
    case Type::Base::Any: return std::nullopt;
    }
    return std::nullopt;
}

OperatorSpace space_irr_statements()
{
    return {"IRR-statements",
            {std::make_shared<InsertBefore>(), std::make_shared<ReplaceStatement>(),
             std::make_shared<RemoveStatement>("remove")}};
}

OperatorSpace space_relational_logical()
{
    static constexpr std::array rel{BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt,
                                    BinaryOp::Ge, BinaryOp::Eq, BinaryOp::Ne};
    OperatorSpace space{"Relational-Logical-op", {}};
    for (BinaryOp from : rel)
        for (BinaryOp to : rel)
            if (from != to)
                space.operators.push_back(std::make_shared<SwapBinary>(
                    "rel:" + std::string(to_string(from)) + "->" + std::string(to_string(to)), from, to));
    space.operators.push_back(std::make_shared<SwapBinary>("logic:&&->||", BinaryOp::And, BinaryOp::Or));
    space.operators.push_back(std::make_shared<SwapBinary>("logic:||->&&", BinaryOp::Or, BinaryOp::And));
    space.operators.push_back(std::make_shared<InsertNegation>());
    space.operators.push_back(std::make_shared<RemoveNegation>());
    return space;
}

OperatorSpace space_suppression()
{
    return {"Suppression",
            {std::make_shared<RemoveStatement>("remove-statement"), std::make_shared<InsertReturn>(),
             std::make_shared<ForceCondition>(true), std::make_shared<ForceCondition>(false)}};
}

OperatorSpace space_r_expression() { return {"R-expression", {std::make_shared<ReplaceExpression>()}}; }

OperatorSpace space_by_name(std::string_view name)
{
    if (name == "IRR-statements") return space_irr_statements();
    if (name == "Relational-Logical-op") return space_relational_logical();
    if (name == "Suppression") return space_suppression();
    if (name == "R-expression") return space_r_expression();
    throw std::invalid_argument("unknown operator space: " + std::string(name));
}

}  // namespace gvr
