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

#include "gvrepair/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "gvrepair/parser.hpp"
#include "gvrepair/presets.hpp"
#include "gvrepair/report.hpp"

namespace gvr {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

LoadedProject load_project(const fs::path& dir, const fs::path& tests)
{
    const fs::path src = dir / "src";
    if (!fs::is_directory(src)) throw std::invalid_argument("missing source directory " + src.string());
    std::vector<SourceText> files;
    for (const auto& entry : fs::recursive_directory_iterator(src)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".mini") continue;
        files.push_back({fs::relative(entry.path(), src).generic_string(), read_file(entry.path())});
    }
    LoadedProject out{parse_project(files), {}};
    out.suite = load_test_suite(tests.empty() ? dir / "tests.json" : tests);
    return out;
}

RepairRun run_repair(const RunConfig& config)
{
    auto loaded = load_project(config.project_dir, config.tests_path);
    RepairEngine engine(std::move(loaded.project), std::move(loaded.suite), config.engine);
    RepairRun run;
    run.result = engine.search();
    run.patches = engine.refine(run.result);
    run.exit_code = run.patches.empty() ? kExitNotRepaired : kExitRepaired;
    run.outcome = run.patches.empty() ? "not-repaired" : "repaired";
    run.report = make_report(config, engine.buggy(), run.result, run.patches, run.outcome);
    return run;
}

int cmd_repair(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    RepairRun run;
    try {
        run = run_repair(config);
    } catch (const NoFailingTests& e) {
        err << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    if (!config.out_dir.empty()) {
        try {
            write_report(config.out_dir, run.report, run.patches);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitError;
        }
    }
    const auto& s = run.result.stats;
    out << run.outcome << ": " << run.patches.size() << " patch(es), " << s.validated << " variants validated in "
        << s.iterations << " iterations (" << s.stop_reason << ")\n";
    for (const auto& p : run.patches) out << "\n" << p.diff;
    return run.exit_code;
}

std::vector<fs::path> corpus_bugs(const fs::path& corpus)
{
    if (!fs::is_directory(corpus)) throw std::invalid_argument("missing corpus directory " + corpus.string());
    std::vector<fs::path> bugs;
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_directory() && fs::exists(entry.path() / "tests.json")) bugs.push_back(entry.path());
    std::sort(bugs.begin(), bugs.end());
    return bugs;
}

std::vector<BenchRow> run_bench(const BenchOptions& options)
{
    std::vector<BenchRow> rows;
    for (const auto& bug : corpus_bugs(options.corpus)) {
        if (!options.bugs.empty() &&
            std::find(options.bugs.begin(), options.bugs.end(), bug.filename().string()) == options.bugs.end())
            continue;
        for (const auto& mode : options.modes) {
            for (auto seed : options.seeds) {
                BenchRow row;
                row.bug = bug.filename().string();
                row.mode = mode;
                row.seed = seed;
                auto start = std::chrono::steady_clock::now();
                try {
                    Settings settings{{"mode", mode}};
                    settings.insert(settings.end(), options.overrides.begin(), options.overrides.end());
                    settings.emplace_back("seed", std::to_string(seed));
                    RunConfig config = resolve_config(settings);
                    config.project_dir = bug;
                    auto run = run_repair(config);
                    row.repaired = !run.patches.empty();
                    if (row.repaired) row.first_patch_iteration = run.patches.front().iteration;
                    row.validations_to_first_patch = run.result.stats.validations_to_first_solution;
                    row.validated = run.result.stats.validated;
                } catch (const std::exception& e) {
                    row.error = e.what();
                    spdlog::warn("{} / {} / seed {}: {}", row.bug, mode, seed, e.what());
                }
                row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                spdlog::info("{} {} seed={} repaired={}", row.bug, mode, seed, row.repaired);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing)
{
    std::string out = "bug,mode,seed,repaired,first_patch_iteration,wall_time\n";
    for (const auto& r : rows) {
        out += r.bug + "," + r.mode + "," + std::to_string(r.seed) + "," + (r.repaired ? "true" : "false") + ",";
        out += r.first_patch_iteration ? std::to_string(*r.first_patch_iteration) : "-";
        out += ",";
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", r.wall_seconds);
            out += buf;
        } else {
            out += "-";
        }
        out += "\n";
    }
    return out;
}

std::string bench_summary_csv(const std::vector<BenchRow>& rows, const std::vector<std::string>& modes)
{
    std::string out = "mode,bugs,repaired_any_seed,repaired_all_seeds\n";
    for (const auto& mode : modes) {
        std::map<std::string, std::pair<bool, bool>> per_bug;  // any, all
        for (const auto& r : rows) {
            if (r.mode != mode) continue;
            auto [it, fresh] = per_bug.try_emplace(r.bug, false, true);
            it->second.first = it->second.first || r.repaired;
            it->second.second = it->second.second && r.repaired;
        }
        std::size_t any = 0, all = 0;
        for (const auto& [bug, v] : per_bug) {
            any += v.first;
            all += v.second;
        }
        out += mode + "," + std::to_string(per_bug.size()) + "," + std::to_string(any) + "," + std::to_string(all) + "\n";
    }
    return out;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err)
{
    std::vector<BenchRow> rows;
    try {
        for (const auto& m : options.modes) preset(m);
        rows = run_bench(options);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    const std::string csv = bench_csv(rows, options.timing);
    const std::string summary = bench_summary_csv(rows, options.modes);
    if (!options.out_dir.empty()) {
        try {
            fs::create_directories(options.out_dir);
            write_file(options.out_dir / "bench.csv", csv);
            write_file(options.out_dir / "summary.csv", summary);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitError;
        }
    } else {
        out << csv << "\n";
    }
    out << summary;
    return 0;
}

}  // namespace gvr
