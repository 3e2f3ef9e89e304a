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

#include <string>

#include "gvrepair/ast.hpp"

namespace gvr {

// Canonical pretty-printer. Output re-parses to a structurally identical
// tree: 4-space indentation, one statement per line, minimal parentheses.

std::string print_expression(const Node& expr);
std::string print_statement(const Node& stmt, int indent = 0);
std::string print_function(const Function& fn);
std::string print_file(const SourceFile& file);

/// Prints the node with the given id; throws LangError(UnknownNode).
std::string print_node(const Project& project, NodeId id);

std::string format_scalar(const Scalar& value);

}  // namespace gvr
