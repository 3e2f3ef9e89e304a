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
#include <utility>
#include <vector>

#include "gvrepair/ast.hpp"

namespace gvr {

struct SourceText {
    std::string path;
    std::string text;
};

/// Parses a multi-file project. Files are sorted by path before numbering.
/// Throws LangError on syntax errors, duplicate paths or function names, and
/// on an empty file list.
Project parse_project(std::vector<SourceText> files);

/// Parses a single expression (used for ingredients and tests). Ids are left
/// at 0.
Node parse_expression(const std::string& text);

/// Parses a single statement. Ids are left at 0.
Node parse_statement(const std::string& text);

/// Parses a type annotation such as `int` or `[[float]]`.
Type parse_type(const std::string& text);

}  // namespace gvr
