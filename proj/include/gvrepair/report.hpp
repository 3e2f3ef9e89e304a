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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvrepair/config.hpp"
#include "gvrepair/engine.hpp"

namespace gvr {

inline constexpr int kReportVersion = 1;

nlohmann::ordered_json stats_to_json(const SearchStats& stats);
nlohmann::ordered_json patch_to_json(const Project& buggy, const Patch& patch);

/// report.json content: version, outcome, seed, config echo, stats, patches.
/// Contains no timing so identical runs give identical bytes.
nlohmann::ordered_json make_report(const RunConfig& config, const Project& buggy, const SearchResult& result,
                                   const std::vector<Patch>& patches, const std::string& outcome);

/// File name of the n-th (1-based) patch: patch-001.patch.
std::string patch_file_name(std::size_t order);

/// Writes report.json and one .patch file per patch into `dir`.
void write_report(const std::filesystem::path& dir, const nlohmann::ordered_json& report,
                  const std::vector<Patch>& patches);

}  // namespace gvr
