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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/commands.hpp"
#include "gvrepair/diff.hpp"
#include "gvrepair/parser.hpp"
#include "gvrepair/printer.hpp"
#include "gvrepair/validate.hpp"

namespace gvr::testing {

inline std::filesystem::path source_dir() { return GVR_SOURCE_DIR; }
inline std::filesystem::path corpus_dir() { return source_dir() / "corpus"; }

inline std::vector<std::string> corpus_names()
{
    std::vector<std::string> names;
    for (const auto& p : corpus_bugs(corpus_dir())) names.push_back(p.filename().string());
    return names;
}

inline LoadedProject load_bug(const std::string& name) { return load_project(corpus_dir() / name); }

inline std::string read_file(const std::filesystem::path& path);

/// The bug's sources with its expected_fix.patch applied.
inline Project fixed_project(const std::string& name)
{
    auto bug = load_bug(name);
    auto sources = apply_patch(printed_sources(bug.project), read_file(corpus_dir() / name / "expected_fix.patch"));
    std::vector<SourceText> files;
    for (auto& [path, text] : sources) files.push_back({path, text});
    return parse_project(std::move(files));
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Project parse_one(const std::string& text, const std::string& path = "main.mini")
{
    return parse_project({SourceText{path, text}});
}

/// First node, in pre-order, whose printed form is `printed`; 0 if none.
inline NodeId find_printed(const Project& project, const std::string& printed)
{
    ProjectIndex index(project);
    for (NodeId id : index.preorder()) {
        const Node& n = *index.at(id).node;
        std::string text = is_statement(n.kind) ? print_statement(n) : print_expression(n);
        if (text == printed) return id;
    }
    return 0;
}

/// Fresh scratch directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("gvrepair-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace gvr::testing
