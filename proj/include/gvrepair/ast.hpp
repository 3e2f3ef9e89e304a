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

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace gvr {

using NodeId = std::int32_t;

/// Static type of a MiniLang value. Arrays are encoded by nesting rank over a
/// scalar base, so `[[int]]` is {Int, 2}. `Any` marks types the checker could
/// not pin down (e.g. the element type of `[]`).
struct Type {
    enum class Base : std::uint8_t { Any, Void, Int, Float, Bool, String };

    Base base = Base::Any;
    int rank = 0;

    static Type any() { return {Base::Any, 0}; }
    static Type void_() { return {Base::Void, 0}; }
    static Type int_() { return {Base::Int, 0}; }
    static Type float_() { return {Base::Float, 0}; }
    static Type bool_() { return {Base::Bool, 0}; }
    static Type string_() { return {Base::String, 0}; }

    bool is_array() const { return rank > 0; }
    bool is_any() const { return base == Base::Any && rank == 0; }
    bool is_numeric() const { return rank == 0 && (base == Base::Int || base == Base::Float); }
    Type element() const { return {base, rank > 0 ? rank - 1 : 0}; }
    Type array_of() const { return {base, rank + 1}; }

    std::string name() const;

    friend bool operator==(const Type&, const Type&) = default;
};

/// True when a value of type `actual` may flow where `expected` is required.
bool compatible(const Type& expected, const Type& actual);

enum class NodeKind : std::uint8_t {
    // statements
    Block,
    VarDecl,
    Assign,
    If,
    While,
    Return,
    ExprStmt,
    // expressions
    Binary,
    Unary,
    Call,
    VarRef,
    Literal,
    Index,
    ArrayLit,
};

enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnaryOp : std::uint8_t { Neg, Not };

bool is_statement(NodeKind kind);
inline bool is_expression(NodeKind kind) { return !is_statement(kind); }
bool is_relational(BinaryOp op);
bool is_logical(BinaryOp op);
std::string_view to_string(NodeKind kind);
std::string_view to_string(BinaryOp op);
std::string_view to_string(UnaryOp op);

using Scalar = std::variant<std::int64_t, double, bool, std::string>;

/// One AST node. Children layout per kind:
///   Block: statements          VarDecl: [init]           Assign: [target, value]
///   If: [cond, then, else?]    While: [cond, body]       Return: [value?]
///   ExprStmt: [expr]           Binary: [lhs, rhs]        Unary: [operand]
///   Call: [args...] or, when `method` is set, [receiver, args...]
///   Index: [array, index]      ArrayLit: [elements...]   VarRef/Literal: []
/// `else` branches are always blocks; `else if` is a block holding one `if`.
/// Ids start at 1; 0 means "not yet numbered".
struct Node {
    NodeId id = 0;
    NodeKind kind = NodeKind::Block;
    std::uint8_t op = 0;
    std::string name;
    bool method = false;
    Scalar literal{std::int64_t{0}};
    std::optional<Type> declared;
    int line = 0;
    int column = 0;
    std::vector<Node> children;

    BinaryOp binary_op() const { return static_cast<BinaryOp>(op); }
    UnaryOp unary_op() const { return static_cast<UnaryOp>(op); }
};

/// Structural equality: ignores node ids and source positions.
bool structurally_equal(const Node& a, const Node& b);

struct Param {
    std::string name;
    Type type;
    friend bool operator==(const Param&, const Param&) = default;
};

struct Function {
    std::string name;
    std::vector<Param> params;
    std::optional<Type> declared_return;
    Node body;  // always a Block
    int line = 0;
};

struct SourceFile {
    std::string path;
    std::string module;
    std::vector<Function> functions;
};

struct SourceLocation {
    std::string file;
    int line = 0;
    int column = 0;
};

/// A parsed multi-file MiniLang program. Files are kept in lexicographic path
/// order and node ids are assigned pre-order across them, so numbering is a
/// pure function of the inputs.
struct Project {
    std::vector<SourceFile> files;
    NodeId next_id = 0;

    const Function* find_function(std::string_view name) const;
};

bool structurally_equal(const Project& a, const Project& b);

/// Module of a file: its directory path relative to the project source root,
/// or "." for files at the root.
std::string module_of(std::string_view path);

/// Where a node lives inside a project.
struct NodeRef {
    const Node* node = nullptr;
    const Node* parent = nullptr;
    const Function* function = nullptr;
    std::size_t file = 0;
    std::size_t position = 0;  // index within parent's children
};

/// Read-only id -> node lookup over one project. Pointers stay valid for the
/// lifetime of the indexed project object, which must not be modified.
class ProjectIndex {
public:
    explicit ProjectIndex(const Project& project);

    const NodeRef* find(NodeId id) const;
    const NodeRef& at(NodeId id) const;
    /// Nearest statement that is the node itself or one of its ancestors.
    const Node* enclosing_statement(NodeId id) const;
    const Project& project() const { return *project_; }

    /// Every node in pre-order (files, then functions, then bodies).
    const std::vector<NodeId>& preorder() const { return order_; }

private:
    const Project* project_;
    std::unordered_map<NodeId, NodeRef> refs_;
    std::vector<NodeId> order_;
};

enum class ErrorCode {
    SyntaxError,
    DuplicateFunction,
    EmptyProject,
    DuplicatePath,
    UnknownNode,
};

class LangError : public std::runtime_error {
public:
    LangError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Visits `node` and its descendants in pre-order; returning false from the
/// callback skips that node's children.
void walk(const Node& node, const std::function<bool(const Node&)>& visit);

/// Assigns fresh ids to `node` and all its descendants, starting at `next`.
void renumber(Node& node, NodeId& next);

/// Marks `node` and its descendants as new content (id 0).
void clear_ids(Node& node);

/// Returns a copy of `project` in which `target` is replaced by
/// `replacement`. A statement inside a block may be replaced by zero or more
/// statements (deletion / insertion); any other node needs exactly one.
/// Replacement nodes carrying id 0 receive fresh ids; others keep theirs. Returns nullopt if the target does not
/// exist or the splice shape is invalid.
std::optional<Project> splice(const Project& project, NodeId target, std::vector<Node> replacement);

}  // namespace gvr
