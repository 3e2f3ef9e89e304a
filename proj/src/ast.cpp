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

#include "gvrepair/ast.hpp"

#include <algorithm>

namespace gvr {

std::string Type::name() const
{
    std::string scalar;
    switch (base) {
    case Base::Any: scalar = "any"; break;
    case Base::Void: scalar = "void"; break;
    case Base::Int: scalar = "int"; break;
    case Base::Float: scalar = "float"; break;
    case Base::Bool: scalar = "bool"; break;
    case Base::String: scalar = "string"; break;
    }
    return std::string(static_cast<std::size_t>(rank), '[') + scalar + std::string(static_cast<std::size_t>(rank), ']');
}

bool compatible(const Type& expected, const Type& actual)
{
    if (expected.base == Type::Base::Any) {
        return actual.rank >= expected.rank;
    }
    if (actual.base == Type::Base::Any) {
        return expected.rank >= actual.rank;
    }
    return expected == actual;
}

bool is_statement(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Block:
    case NodeKind::VarDecl:
    case NodeKind::Assign:
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::Return:
    case NodeKind::ExprStmt:
        return true;
    default:
        return false;
    }
}

bool is_relational(BinaryOp op)
{
    return op >= BinaryOp::Lt && op <= BinaryOp::Ne;
}

bool is_logical(BinaryOp op)
{
    return op == BinaryOp::And || op == BinaryOp::Or;
}

std::string_view to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Block: return "block";
    case NodeKind::VarDecl: return "var-decl";
    case NodeKind::Assign: return "assign";
    case NodeKind::If: return "if";
    case NodeKind::While: return "while";
    case NodeKind::Return: return "return";
    case NodeKind::ExprStmt: return "expr-stmt";
    case NodeKind::Binary: return "binary-op";
    case NodeKind::Unary: return "unary-op";
    case NodeKind::Call: return "call";
    case NodeKind::VarRef: return "var-ref";
    case NodeKind::Literal: return "literal";
    case NodeKind::Index: return "index";
    case NodeKind::ArrayLit: return "array-literal";
    }
    return "?";
}

std::string_view to_string(BinaryOp op)
{
    static constexpr std::string_view names[] = {"+", "-", "*", "/", "%", "<", "<=", ">", ">=", "==", "!=", "&&", "||"};
    return names[static_cast<std::size_t>(op)];
}

std::string_view to_string(UnaryOp op)
{
    return op == UnaryOp::Neg ? "-" : "!";
}

bool structurally_equal(const Node& a, const Node& b)
{
    if (a.kind != b.kind || a.op != b.op || a.name != b.name || a.method != b.method
        || a.declared != b.declared || a.children.size() != b.children.size()) {
        return false;
    }
    if (a.kind == NodeKind::Literal && a.literal != b.literal) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurally_equal(a.children[i], b.children[i])) {
            return false;
        }
    }
    return true;
}

bool structurally_equal(const Project& a, const Project& b)
{
    if (a.files.size() != b.files.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.files.size(); ++i) {
        const auto& fa = a.files[i];
        const auto& fb = b.files[i];
        if (fa.path != fb.path || fa.functions.size() != fb.functions.size()) {
            return false;
        }
        for (std::size_t j = 0; j < fa.functions.size(); ++j) {
            const auto& x = fa.functions[j];
            const auto& y = fb.functions[j];
            if (x.name != y.name || x.params != y.params || x.declared_return != y.declared_return
                || !structurally_equal(x.body, y.body)) {
                return false;
            }
        }
    }
    return true;
}

const Function* Project::find_function(std::string_view name) const
{
    for (const auto& file : files) {
        for (const auto& fn : file.functions) {
            if (fn.name == name) {
                return &fn;
            }
        }
    }
    return nullptr;
}

std::string module_of(std::string_view path)
{
    auto slash = path.rfind('/');
    if (slash == std::string_view::npos) {
        return ".";
    }
    return std::string(path.substr(0, slash));
}

namespace {

void index_node(const Node& node, const Node* parent, std::size_t position, const Function* fn, std::size_t file,
                std::unordered_map<NodeId, NodeRef>& refs, std::vector<NodeId>& order)
{
    refs[node.id] = NodeRef{&node, parent, fn, file, position};
    order.push_back(node.id);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        index_node(node.children[i], &node, i, fn, file, refs, order);
    }
}

}  // namespace

ProjectIndex::ProjectIndex(const Project& project) : project_(&project)
{
    for (std::size_t f = 0; f < project.files.size(); ++f) {
        for (const auto& fn : project.files[f].functions) {
            index_node(fn.body, nullptr, 0, &fn, f, refs_, order_);
        }
    }
}

const NodeRef* ProjectIndex::find(NodeId id) const
{
    auto it = refs_.find(id);
    return it == refs_.end() ? nullptr : &it->second;
}

const NodeRef& ProjectIndex::at(NodeId id) const
{
    const auto* ref = find(id);
    if (ref == nullptr) {
        throw LangError(ErrorCode::UnknownNode, "unknown node id " + std::to_string(id));
    }
    return *ref;
}

const Node* ProjectIndex::enclosing_statement(NodeId id) const
{
    const NodeRef* ref = find(id);
    while (ref != nullptr) {
        if (is_statement(ref->node->kind)) {
            return ref->node;
        }
        if (ref->parent == nullptr) {
            return nullptr;
        }
        ref = find(ref->parent->id);
    }
    return nullptr;
}

void walk(const Node& node, const std::function<bool(const Node&)>& visit)
{
    if (!visit(node)) {
        return;
    }
    for (const auto& child : node.children) {
        walk(child, visit);
    }
}

void renumber(Node& node, NodeId& next)
{
    node.id = next++;
    for (auto& child : node.children) {
        renumber(child, next);
    }
}

void clear_ids(Node& node)
{
    node.id = 0;
    for (auto& child : node.children) {
        clear_ids(child);
    }
}

namespace {

void number_fresh(Node& node, NodeId& next)
{
    if (node.id == 0) {
        node.id = next++;
    }
    for (auto& child : node.children) {
        number_fresh(child, next);
    }
}

// Returns true once the target was found (whether or not the splice was legal).
bool splice_in(Node& node, NodeId target, std::vector<Node>& replacement, bool& ok)
{
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        Node& child = node.children[i];
        if (child.id == target) {
            bool in_block = node.kind == NodeKind::Block && is_statement(child.kind);
            if (in_block) {
                if (std::any_of(replacement.begin(), replacement.end(),
                                [](const Node& n) { return !is_statement(n.kind) || n.kind == NodeKind::Block; })) {
                    ok = false;
                    return true;
                }
                auto pos = node.children.begin() + static_cast<std::ptrdiff_t>(i);
                pos = node.children.erase(pos);
                node.children.insert(pos, std::make_move_iterator(replacement.begin()),
                                     std::make_move_iterator(replacement.end()));
                ok = true;
                return true;
            }
            if (replacement.size() != 1 || is_statement(replacement[0].kind) != is_statement(child.kind)) {
                ok = false;
                return true;
            }
            child = std::move(replacement[0]);
            ok = true;
            return true;
        }
        if (splice_in(child, target, replacement, ok)) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Project> splice(const Project& project, NodeId target, std::vector<Node> replacement)
{
    NodeId next = project.next_id;
    for (auto& n : replacement) {
        number_fresh(n, next);
    }
    Project out = project;
    out.next_id = next;
    for (auto& file : out.files) {
        for (auto& fn : file.functions) {
            if (fn.body.id == target) {
                return std::nullopt;  // function bodies are not replaceable
            }
            bool ok = false;
            if (splice_in(fn.body, target, replacement, ok)) {
                if (!ok) {
                    return std::nullopt;
                }
                return out;
            }
        }
    }
    return std::nullopt;
}

}  // namespace gvr
