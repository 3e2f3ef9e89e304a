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

#include "gvrepair/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "gvrepair/printer.hpp"

namespace gvr {

nlohmann::ordered_json stats_to_json(const SearchStats& s)
{
    nlohmann::ordered_json j;
    j["stop_reason"] = s.stop_reason;
    j["tests"] = s.tests;
    j["failing_tests"] = s.failing_tests;
    j["suspicious_statements"] = s.suspicious;
    j["modification_points"] = s.points;
    j["iterations"] = s.iterations;
    j["variants_generated"] = s.generated;
    j["variants_validated"] = s.validated;
    j["not_applicable"] = s.not_applicable;
    j["ill_typed"] = s.ill_typed;
    j["memo_hits"] = s.memo_hits;
    j["test_runs"] = s.test_runs;
    j["solutions"] = s.solutions;
    j["pool_builds"] = s.pool_builds;
    j["first_solution_iteration"] = s.first_solution_iteration ? nlohmann::ordered_json(*s.first_solution_iteration)
                                                               : nlohmann::ordered_json(nullptr);
    j["validations_to_first_solution"] = s.validations_to_first_solution
                                             ? nlohmann::ordered_json(*s.validations_to_first_solution)
                                             : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json ops = nlohmann::ordered_json::object();
    for (const auto& [name, o] : s.per_operator)
        ops[name] = {{"generated", o.generated}, {"validated", o.validated}, {"solutions", o.solutions}};
    j["per_operator"] = ops;
    return j;
}

nlohmann::ordered_json patch_to_json(const Project& buggy, const Patch& patch)
{
    ProjectIndex index(buggy);
    nlohmann::ordered_json j;
    j["order"] = patch.order;
    j["iteration"] = patch.iteration;
    j["file"] = patch_file_name(patch.order);
    nlohmann::ordered_json ts = nlohmann::ordered_json::array();
    for (const auto& t : patch.transformations) {
        nlohmann::ordered_json tj;
        tj["operator"] = t.op->name();
        tj["target"] = t.point.target;
        tj["granularity"] = to_string(t.point.granularity);
        tj["suspiciousness"] = t.point.suspiciousness;
        if (const NodeRef* ref = index.find(t.point.target)) {
            tj["path"] = buggy.files[ref->file].path;
            tj["line"] = ref->node->line;
            tj["original"] = is_statement(ref->node->kind) ? print_statement(*ref->node) : print_expression(*ref->node);
        }
        if (t.ingredient)
            tj["ingredient"] = is_statement(t.ingredient->kind) ? print_statement(*t.ingredient)
                                                                : print_expression(*t.ingredient);
        else
            tj["ingredient"] = nullptr;
        ts.push_back(std::move(tj));
    }
    j["transformations"] = std::move(ts);
    j["removed_by_minimization"] = patch.removed;
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& f : patch.files) files.push_back(f.path);
    j["files"] = std::move(files);
    j["diff"] = patch.diff;
    return j;
}

nlohmann::ordered_json make_report(const RunConfig& config, const Project& buggy, const SearchResult& result,
                                   const std::vector<Patch>& patches, const std::string& outcome)
{
    nlohmann::ordered_json j;
    j["version"] = kReportVersion;
    j["outcome"] = outcome;
    j["seed"] = config.engine.seed;
    j["config"] = config_to_json(config);
    j["stats"] = stats_to_json(result.stats);
    nlohmann::ordered_json ps = nlohmann::ordered_json::array();
    for (const auto& p : patches) ps.push_back(patch_to_json(buggy, p));
    j["patches"] = std::move(ps);
    return j;
}

std::string patch_file_name(std::size_t order)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "patch-%03zu.patch", order);
    return buf;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

void write_report(const std::filesystem::path& dir, const nlohmann::ordered_json& report,
                  const std::vector<Patch>& patches)
{
    std::filesystem::create_directories(dir);
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("patch-", 0) == 0 && entry.path().extension() == ".patch") std::filesystem::remove(entry.path());
    }
    write_text(dir / "report.json", report.dump(2) + "\n");
    for (const auto& p : patches) write_text(dir / patch_file_name(p.order), p.diff);
}

}  // namespace gvr
