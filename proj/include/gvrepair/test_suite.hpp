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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvrepair/interpreter.hpp"
#include "gvrepair/value.hpp"

namespace gvr {

/// One test: call `entry(args...)` and compare against either an expected
/// value or an expected runtime-error kind.
struct TestCase {
    std::string name;
    std::string entry;
    std::vector<Value> args;
    std::optional<Value> expect;
    std::optional<std::string> expect_error;
};

using TestSuite = std::vector<TestCase>;

/// Parses the `tests.json` document:
///   [{"name": str, "entry": str, "args": [..], "expect": v} |
///    {"name": str, "entry": str, "args": [..], "expect_error": kind}]
/// Throws std::invalid_argument on schema violations or duplicate names.
TestSuite parse_test_suite(const nlohmann::json& doc);
TestSuite load_test_suite(const std::filesystem::path& path);

/// Pass iff the outcome is a normal return matching `expect`, or a runtime
/// error whose kind equals `expect_error`. Timeouts always fail.
bool test_passes(const TestCase& test, const Outcome& outcome);

}  // namespace gvr
