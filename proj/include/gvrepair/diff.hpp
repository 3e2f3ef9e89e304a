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
#include <string>
#include <string_view>
#include <vector>

namespace gvr {

/// One unified-diff hunk. Lines carry their ' ', '-' or '+' prefix and no
/// trailing newline.
struct Hunk {
    std::size_t old_start = 0;
    std::size_t old_count = 0;
    std::size_t new_start = 0;
    std::size_t new_count = 0;
    std::vector<std::string> lines;
};

struct FileDiff {
    std::string path;
    std::vector<Hunk> hunks;
};

/// Splits newline-terminated text into lines (a missing final newline is
/// tolerated).
std::vector<std::string> split_lines(std::string_view text);

/// Myers shortest edit script between two texts, grouped into hunks with
/// `context` lines of context. Empty hunk list when the texts are equal.
FileDiff diff_texts(const std::string& path, std::string_view before, std::string_view after, int context = 3);

/// `--- a/<path>` / `+++ b/<path>` headers followed by the hunks.
std::string format_unified(const std::vector<FileDiff>& files);

/// Parses text produced by format_unified. Throws std::invalid_argument.
std::vector<FileDiff> parse_unified(std::string_view text);

/// Applies one file's hunks. Throws std::runtime_error if the context does
/// not match.
std::string apply_diff(std::string_view before, const FileDiff& diff);

/// Applies a multi-file unified diff to `sources` (path -> text).
std::map<std::string, std::string> apply_patch(std::map<std::string, std::string> sources, std::string_view patch);

}  // namespace gvr
