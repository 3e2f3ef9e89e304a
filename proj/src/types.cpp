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

#include "gvrepair/types.hpp"

#include <algorithm>
#include <set>

namespace gvr {

namespace {

struct BuiltinInfo {
    std::string_view name;
    std::size_t arity;
};

constexpr BuiltinInfo kBuiltinFunctions[] = {
    {"abs", 1}, {"min", 2}, {"max", 2}, {"to_float", 1}, {"to_int", 1}, {"str", 1},
};

constexpr BuiltinInfo kBuiltinMethods[] = {
    {"length", 0}, {"substr", 2}, {"append", 1},
};

std::optional<std::size_t> builtin_arity(std::string_view name, bool method)
{
    if (method) {
        for (const auto& b : kBuiltinMethods) {
            if (b.name == name) return b.arity;
        }
    } else {
        for (const auto& b : kBuiltinFunctions) {
            if (b.name == name) return b.arity;
        }
    }
    return std::nullopt;
}

Type literal_type(const Scalar& s)
{
    switch (s.index()) {
    case 0: return Type::int_();
    case 1: return Type::float_();
    case 2: return Type::bool_();
    default: return Type::string_();
    }
}

Type numeric_join(const Type& a, const Type& b)
{
    if (a == Type::int_() && b == Type::int_()) return Type::int_();
    if (a.is_numeric() && b.is_numeric()) return Type::float_();
    if (a.is_any() && b.is_numeric()) return b == Type::float_() ? b : Type::any();
    if (b.is_any() && a.is_numeric()) return a == Type::float_() ? a : Type::any();
    return Type::any();
}

// Finds the first value-carrying return and infers its type.
std::optional<Type> first_return_type(const Node& block, Environment env, const TypeContext& types)
{
    for (const auto& s : block.children) {
        switch (s.kind) {
        case NodeKind::Return:
            if (!s.children.empty()) {
                return types.infer(s.children[0], env);
            }
            break;
        case NodeKind::VarDecl:
            env.bind(s.name, s.declared ? *s.declared : types.infer(s.children[0], env));
            break;
        case NodeKind::Block:
            if (auto t = first_return_type(s, env, types)) return t;
            break;
        case NodeKind::If:
            for (std::size_t i = 1; i < s.children.size(); ++i) {
                if (auto t = first_return_type(s.children[i], env, types)) return t;
            }
            break;
        case NodeKind::While:
            if (auto t = first_return_type(s.children[1], env, types)) return t;
            break;
        default:
            break;
        }
    }
    return std::nullopt;
}

bool has_bare_return(const Node& node)
{
    if (node.kind == NodeKind::Return) {
        return node.children.empty();
    }
    return std::any_of(node.children.begin(), node.children.end(), [](const Node& c) { return has_bare_return(c); });
}

}  // namespace

bool is_builtin_function(std::string_view name)
{
    return builtin_arity(name, false).has_value();
}

bool is_builtin_method(std::string_view name)
{
    return builtin_arity(name, true).has_value();
}

std::optional<Type> Environment::lookup(std::string_view name) const
{
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (it->first == name) {
            return it->second;
        }
    }
    return std::nullopt;
}

std::vector<std::pair<std::string, Type>> Environment::visible() const
{
    std::vector<std::pair<std::string, Type>> out;
    for (const auto& [name, type] : vars) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& v) { return v.first == name; });
        if (it == out.end()) {
            out.emplace_back(name, type);
        } else {
            it->second = type;
        }
    }
    return out;
}

TypeContext::TypeContext(const Project& project)
{
    for (const auto& file : project.files) {
        for (const auto& fn : file.functions) {
            Signature sig;
            for (const auto& p : fn.params) {
                sig.params.push_back(p.type);
            }
            sig.result = fn.declared_return.value_or(Type::any());
            sigs_[fn.name] = std::move(sig);
        }
    }
    // Two rounds let callers of undeclared functions see inferred results.
    for (int round = 0; round < 2; ++round) {
        for (const auto& file : project.files) {
            for (const auto& fn : file.functions) {
                if (fn.declared_return) {
                    continue;
                }
                Environment env;
                for (const auto& p : fn.params) {
                    env.bind(p.name, p.type);
                }
                auto t = first_return_type(fn.body, env, *this);
                sigs_[fn.name].result = t ? *t : Type::void_();
            }
        }
    }
}

const Signature* TypeContext::find(std::string_view name) const
{
    auto it = sigs_.find(name);
    return it == sigs_.end() ? nullptr : &it->second;
}

Type TypeContext::return_type(const Function& fn) const
{
    const auto* sig = find(fn.name);
    return sig != nullptr ? sig->result : Type::any();
}

Type TypeContext::infer(const Node& e, const Environment& env) const
{
    switch (e.kind) {
    case NodeKind::Literal:
        return literal_type(e.literal);
    case NodeKind::VarRef:
        return env.lookup(e.name).value_or(Type::any());
    case NodeKind::ArrayLit:
        for (const auto& c : e.children) {
            Type t = infer(c, env);
            if (!t.is_any()) {
                return t.array_of();
            }
        }
        return Type::any().array_of();
    case NodeKind::Index: {
        Type base = infer(e.children[0], env);
        if (base.is_array()) return base.element();
        if (base == Type::string_()) return Type::string_();
        return Type::any();
    }
    case NodeKind::Unary:
        if (e.unary_op() == UnaryOp::Not) return Type::bool_();
        return infer(e.children[0], env);
    case NodeKind::Binary: {
        BinaryOp op = e.binary_op();
        if (is_relational(op) || is_logical(op)) return Type::bool_();
        Type a = infer(e.children[0], env);
        Type b = infer(e.children[1], env);
        if (op == BinaryOp::Add && (a == Type::string_() || b == Type::string_())) return Type::string_();
        return numeric_join(a, b);
    }
    case NodeKind::Call: {
        if (e.method) {
            Type recv = infer(e.children[0], env);
            if (e.name == "length") return Type::int_();
            if (e.name == "substr") return Type::string_();
            if (e.name == "append") return recv;
            return Type::any();
        }
        if (e.name == "abs" && e.children.size() == 1) return infer(e.children[0], env);
        if ((e.name == "min" || e.name == "max") && e.children.size() == 2) {
            return numeric_join(infer(e.children[0], env), infer(e.children[1], env));
        }
        if (e.name == "to_float") return Type::float_();
        if (e.name == "to_int") return Type::int_();
        if (e.name == "str") return Type::string_();
        const auto* sig = find(e.name);
        return sig != nullptr ? sig->result : Type::any();
    }
    default:
        return Type::any();
    }
}

Environment scope_at(const ProjectIndex& index, const TypeContext& types, NodeId id)
{
    const Node* stmt = index.enclosing_statement(id);
    if (stmt == nullptr) {
        return {};
    }
    // Path from the statement up to the function body.
    std::vector<const NodeRef*> path;
    for (const NodeRef* ref = &index.at(stmt->id); ref != nullptr;
         ref = ref->parent != nullptr ? &index.at(ref->parent->id) : nullptr) {
        path.push_back(ref);
    }
    Environment env;
    for (const auto& p : path.front()->function->params) {
        env.bind(p.name, p.type);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const NodeRef* ref = *it;
        if (ref->parent == nullptr || ref->parent->kind != NodeKind::Block) {
            continue;
        }
        for (std::size_t i = 0; i < ref->position; ++i) {
            const Node& sibling = ref->parent->children[i];
            if (sibling.kind == NodeKind::VarDecl) {
                env.bind(sibling.name, sibling.declared ? *sibling.declared : types.infer(sibling.children[0], env));
            }
        }
    }
    return env;
}

namespace {

void collect_free(const Node& node, std::vector<std::set<std::string>>& scopes, std::vector<std::string>& out)
{
    auto bound = [&](const std::string& name) {
        return std::any_of(scopes.begin(), scopes.end(), [&](const auto& s) { return s.count(name) > 0; });
    };
    switch (node.kind) {
    case NodeKind::VarRef:
        if (!bound(node.name) && std::find(out.begin(), out.end(), node.name) == out.end()) {
            out.push_back(node.name);
        }
        return;
    case NodeKind::VarDecl:
        collect_free(node.children[0], scopes, out);
        scopes.back().insert(node.name);
        return;
    case NodeKind::Block:
        scopes.emplace_back();
        for (const auto& c : node.children) {
            collect_free(c, scopes, out);
        }
        scopes.pop_back();
        return;
    default:
        for (const auto& c : node.children) {
            collect_free(c, scopes, out);
        }
    }
}

class Checker {
public:
    Checker(const Function& fn, const TypeContext& types) : fn_(fn), types_(types), ret_(types.return_type(fn)) {}

    std::optional<std::string> run()
    {
        Environment env;
        for (const auto& p : fn_.params) {
            env.bind(p.name, p.type);
        }
        block(fn_.body, env);
        if (!error_ && ret_ != Type::void_() && !ret_.is_any() && has_bare_return(fn_.body)) {
            fail(fn_.body, "bare return in function returning " + ret_.name());
        }
        return error_;
    }

private:
    void fail(const Node& at, const std::string& msg)
    {
        if (!error_) {
            error_ = fn_.name + ":" + std::to_string(at.line) + ": " + msg;
        }
    }

    void expect(const Node& at, const Type& want, const Type& got, const char* what)
    {
        if (!compatible(want, got)) {
            fail(at, std::string(what) + ": expected " + want.name() + ", found " + got.name());
        }
    }

    void block(const Node& b, Environment env)
    {
        for (const auto& s : b.children) {
            stmt(s, env);
            if (error_) return;
        }
    }

    void stmt(const Node& s, Environment& env)
    {
        switch (s.kind) {
        case NodeKind::Block:
            block(s, env);
            break;
        case NodeKind::VarDecl: {
            Type init = expr(s.children[0], env);
            if (s.declared) {
                expect(s, *s.declared, init, "initializer");
            }
            env.bind(s.name, s.declared ? *s.declared : init);
            break;
        }
        case NodeKind::Assign: {
            const Node& target = s.children[0];
            Type want = expr(target, env);
            Type got = expr(s.children[1], env);
            expect(s, want, got, "assignment");
            break;
        }
        case NodeKind::If:
            expect(s, Type::bool_(), expr(s.children[0], env), "condition");
            for (std::size_t i = 1; i < s.children.size(); ++i) {
                block(s.children[i], env);
            }
            break;
        case NodeKind::While:
            expect(s, Type::bool_(), expr(s.children[0], env), "condition");
            block(s.children[1], env);
            break;
        case NodeKind::Return:
            if (s.children.empty()) {
                if (ret_ != Type::void_() && !ret_.is_any()) {
                    fail(s, "missing return value");
                }
            } else {
                Type got = expr(s.children[0], env);
                if (ret_ == Type::void_()) {
                    fail(s, "return with a value in a void function");
                } else {
                    expect(s, ret_, got, "return");
                }
            }
            break;
        case NodeKind::ExprStmt:
            expr(s.children[0], env);
            break;
        default:
            fail(s, "expression in statement position");
        }
    }

    Type expr(const Node& e, const Environment& env)
    {
        switch (e.kind) {
        case NodeKind::VarRef:
            if (!env.lookup(e.name)) {
                fail(e, "undeclared variable '" + e.name + "'");
            }
            break;
        case NodeKind::Binary: {
            Type a = expr(e.children[0], env);
            Type b = expr(e.children[1], env);
            BinaryOp op = e.binary_op();
            if (is_logical(op)) {
                expect(e, Type::bool_(), a, "operand");
                expect(e, Type::bool_(), b, "operand");
            } else if (op == BinaryOp::Eq || op == BinaryOp::Ne) {
                if (!compatible(a, b) && !(a.is_numeric() && b.is_numeric())) {
                    fail(e, "cannot compare " + a.name() + " with " + b.name());
                }
            } else if (is_relational(op)) {
                bool ok = (a.is_any() || a.is_numeric() || a == Type::string_())
                          && (b.is_any() || b.is_numeric() || b == Type::string_());
                if (!ok) fail(e, "cannot order " + a.name() + " and " + b.name());
            } else {
                bool strings = op == BinaryOp::Add && (a == Type::string_() || b == Type::string_());
                if (strings) {
                    expect(e, Type::string_(), a, "operand");
                    expect(e, Type::string_(), b, "operand");
                } else if (!(a.is_any() || a.is_numeric()) || !(b.is_any() || b.is_numeric())) {
                    fail(e, "arithmetic on " + a.name() + " and " + b.name());
                }
            }
            break;
        }
        case NodeKind::Unary: {
            Type t = expr(e.children[0], env);
            if (e.unary_op() == UnaryOp::Not) {
                expect(e, Type::bool_(), t, "operand");
            } else if (!(t.is_any() || t.is_numeric())) {
                fail(e, "negation of " + t.name());
            }
            break;
        }
        case NodeKind::Index: {
            Type base = expr(e.children[0], env);
            expect(e, Type::int_(), expr(e.children[1], env), "index");
            if (!(base.is_any() || base.is_array() || base == Type::string_())) {
                fail(e, "indexing a " + base.name());
            }
            break;
        }
        case NodeKind::ArrayLit: {
            Type first = Type::any();
            for (const auto& c : e.children) {
                Type t = expr(c, env);
                if (first.is_any()) {
                    first = t;
                } else {
                    expect(e, first, t, "array element");
                }
            }
            break;
        }
        case NodeKind::Call:
            call(e, env);
            break;
        default:
            break;
        }
        return types_.infer(e, env);
    }

    void call(const Node& e, const Environment& env)
    {
        std::vector<Type> args;
        for (const auto& c : e.children) {
            args.push_back(expr(c, env));
        }
        if (e.method) {
            auto arity = builtin_arity(e.name, true);
            if (!arity) {
                fail(e, "unknown method '" + e.name + "'");
            } else if (e.children.size() - 1 != *arity) {
                fail(e, "wrong argument count for '" + e.name + "'");
            } else {
                const Type& recv = args[0];
                bool ok = recv.is_any() || (e.name == "append" ? recv.is_array()
                                                               : (recv.is_array() || recv == Type::string_()));
                if (e.name == "substr") ok = recv.is_any() || recv == Type::string_();
                if (!ok) fail(e, "method '" + e.name + "' on " + recv.name());
            }
            return;
        }
        if (auto arity = builtin_arity(e.name, false)) {
            if (e.children.size() != *arity) {
                fail(e, "wrong argument count for '" + e.name + "'");
            }
            return;
        }
        const Signature* sig = types_.find(e.name);
        if (sig == nullptr) {
            fail(e, "unknown function '" + e.name + "'");
            return;
        }
        if (sig->params.size() != args.size()) {
            fail(e, "wrong argument count for '" + e.name + "'");
            return;
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
            expect(e, sig->params[i], args[i], "argument");
        }
    }

    const Function& fn_;
    const TypeContext& types_;
    Type ret_;
    std::optional<std::string> error_;
};

}  // namespace

std::vector<std::string> free_variables(const Node& node)
{
    std::vector<std::set<std::string>> scopes(1);
    std::vector<std::string> out;
    collect_free(node, scopes, out);
    return out;
}

std::optional<std::string> check_function(const Function& fn, const TypeContext& types)
{
    return Checker(fn, types).run();
}

std::optional<std::string> check_project(const Project& project)
{
    TypeContext types(project);
    for (const auto& file : project.files) {
        for (const auto& fn : file.functions) {
            if (auto err = check_function(fn, types)) {
                return file.path + ": " + *err;
            }
        }
    }
    return std::nullopt;
}

}  // namespace gvr
