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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gvrepair/engine.hpp"

namespace gvr {

/// Ordered key/value settings; later assignments override earlier ones.
using Settings = std::vector<std::pair<std::string, std::string>>;

/// Parses the flat config format: one `key = value` per line, `#` starts a
/// comment, blank lines ignored, values may be wrapped in double quotes.
/// Throws std::invalid_argument with the offending line number.
Settings parse_config_text(std::string_view text);
Settings load_config_file(const std::filesystem::path& path);

/// Keys accepted by apply_setting (besides `mode`).
const std::vector<std::string>& config_keys();

/// Applies one setting; throws std::invalid_argument on unknown keys or
/// malformed values. Dashes in keys are read as underscores.
void apply_setting(EngineConfig& config, std::string_view key, std::string_view value);

struct RunConfig {
    std::string mode = "jgenprog";
    std::filesystem::path project_dir;
    std::filesystem::path tests_path;  // defaults to <project>/tests.json
    std::filesystem::path out_dir;
    EngineConfig engine;
};

/// Starts from the preset named by `mode` (the last `mode` in `settings`,
/// or "custom" for plain defaults) and applies the remaining settings in
/// order.
RunConfig resolve_config(const Settings& settings);

/// Effective configuration as JSON (paths other than the project excluded).
nlohmann::ordered_json config_to_json(const RunConfig& config);

}  // namespace gvr
