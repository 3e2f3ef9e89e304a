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
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/value.hpp"

namespace gvr {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;
inline constexpr int kMaxCallDepth = 200;

struct NormalOutcome {
    Value value;
};

/// Error kinds: div-by-zero, index-out-of-bounds, undefined-variable,
/// type-error, unknown-function, arity-mismatch, stack-overflow.
struct RuntimeErrorOutcome {
    std::string kind;
    NodeId node = 0;
    int line = 0;
};

struct TimeoutOutcome {};

using Outcome = std::variant<NormalOutcome, RuntimeErrorOutcome, TimeoutOutcome>;

struct ExecutionTrace {
    std::vector<NodeId> covered;  // sorted statement ids whose execution began
    Outcome outcome;
    std::uint64_t steps = 0;
};

/// Tracing tree-walking interpreter bound to one project. Each run() owns its
/// environment, so one Interpreter may serve many runs (and threads).
class Interpreter {
public:
    explicit Interpreter(const Project& project);

    ExecutionTrace run(std::string_view entry, const std::vector<Value>& args, std::uint64_t step_budget) const;

private:
    const Project& project_;
    std::unordered_map<std::string_view, const Function*> functions_;
};

ExecutionTrace execute(const Project& project, std::string_view entry, const std::vector<Value>& args,
                       std::uint64_t step_budget = kDefaultStepBudget);

}  // namespace gvr
