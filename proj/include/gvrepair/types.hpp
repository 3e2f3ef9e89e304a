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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gvrepair/ast.hpp"

namespace gvr {

/// Variables visible at some program point, innermost last. Later entries
/// shadow earlier ones with the same name.
struct Environment {
    std::vector<std::pair<std::string, Type>> vars;

    std::optional<Type> lookup(std::string_view name) const;
    void bind(std::string name, Type type) { vars.emplace_back(std::move(name), type); }
    /// Visible variables with shadowed duplicates removed, in first-binding order.
    std::vector<std::pair<std::string, Type>> visible() const;
};

struct Signature {
    std::vector<Type> params;
    Type result;
};

/// Function signatures of a project, with undeclared return types inferred
/// from the first value-carrying `return` (void when there is none).
class TypeContext {
public:
    explicit TypeContext(const Project& project);

    const Signature* find(std::string_view name) const;
    Type return_type(const Function& fn) const;

    /// Static type of an expression under `env`; Any when it cannot be decided.
    Type infer(const Node& expr, const Environment& env) const;

private:
    std::map<std::string, Signature, std::less<>> sigs_;
};

bool is_builtin_function(std::string_view name);
bool is_builtin_method(std::string_view name);

/// Environment in force right before `id` executes. For expressions this is
/// the environment of the enclosing statement (a declaration's own name is not
/// yet visible in its initializer).
Environment scope_at(const ProjectIndex& index, const TypeContext& types, NodeId id);

/// Free variables of a subtree: names referenced but not bound inside it,
/// in first-occurrence order.
std::vector<std::string> free_variables(const Node& node);

/// Static well-formedness (the compiler substitute): declared variables,
/// known callees with matching arity, and type agreement wherever both sides
/// are known. Returns a message for the first violation.
std::optional<std::string> check_project(const Project& project);
std::optional<std::string> check_function(const Function& fn, const TypeContext& types);

}  // namespace gvr
