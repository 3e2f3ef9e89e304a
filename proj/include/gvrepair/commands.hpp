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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvrepair/config.hpp"
#include "gvrepair/engine.hpp"

namespace gvr {

struct LoadedProject {
    Project project;
    TestSuite suite;
};

/// Reads `<dir>/src/**/*.mini` (paths relative to src/) and the test suite
/// (`<dir>/tests.json` unless `tests` is given).
LoadedProject load_project(const std::filesystem::path& dir, const std::filesystem::path& tests = {});

struct RepairRun {
    int exit_code = 2;
    std::string outcome;
    SearchResult result;
    std::vector<Patch> patches;
    nlohmann::ordered_json report;
};

/// Exit status of cmd_repair: a patch was found.
inline constexpr int kExitRepaired = 0;
/// Usage, parse or input error, or nothing to repair.
inline constexpr int kExitError = 1;
/// The search ended without a patch.
inline constexpr int kExitNotRepaired = 2;

/// Loads the project and runs one repair. Throws on invalid input and
/// NoFailingTests when every test passes.
RepairRun run_repair(const RunConfig& config);

/// run_repair plus output files; errors are reported on `err` and mapped to
/// exit codes.
int cmd_repair(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::filesystem::path corpus;
    std::vector<std::string> bugs;  // empty: every bug in the corpus
    std::vector<std::string> modes;
    std::vector<std::uint64_t> seeds;
    Settings overrides;  // applied after each preset
    bool timing = true;
    std::filesystem::path out_dir;  // bench.csv and summary.csv when set
};

struct BenchRow {
    std::string bug;
    std::string mode;
    std::uint64_t seed = 0;
    bool repaired = false;
    std::optional<std::size_t> first_patch_iteration;
    double wall_seconds = 0;
    std::optional<std::size_t> validations_to_first_patch;
    std::size_t validated = 0;
    std::string error;
};

/// Bug directories of a corpus (those holding tests.json), sorted by name.
std::vector<std::filesystem::path> corpus_bugs(const std::filesystem::path& corpus);

/// Runs every (bug, mode, seed) triple, in that nesting order.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Columns: bug,mode,seed,repaired,first_patch_iteration,wall_time.
/// Without timing the wall_time column holds "-".
std::string bench_csv(const std::vector<BenchRow>& rows, bool timing);

/// Columns: mode,bugs,repaired_any_seed,repaired_all_seeds.
std::string bench_summary_csv(const std::vector<BenchRow>& rows, const std::vector<std::string>& modes);

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace gvr
