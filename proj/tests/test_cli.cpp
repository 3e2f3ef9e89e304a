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


#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gvrepair/commands.hpp"
#include "gvrepair/config.hpp"
#include "gvrepair/report.hpp"
#include "support.hpp"

namespace gvr {
namespace {

namespace fs = std::filesystem;

RunConfig config_for(const std::string& bug, Settings extra = {})
{
    Settings s = {{"mode", "jgenprog"}};
    for (auto& kv : extra) s.push_back(kv);
    RunConfig rc = resolve_config(s);
    rc.project_dir = testing::corpus_dir() / bug;
    return rc;
}

TEST(Config, ParsesKeyValueText)
{
    auto s = parse_config_text("# comment\nmode = jkali\n\nmax-iterations = 50  # trailing\nseed=\"7\"\n");
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], (std::pair<std::string, std::string>{"mode", "jkali"}));
    EXPECT_EQ(s[1], (std::pair<std::string, std::string>{"max_iterations", "50"}));
    EXPECT_EQ(s[2].second, "7");
    EXPECT_THROW(parse_config_text("just words\n"), std::invalid_argument);

    RunConfig rc = resolve_config(s);
    EXPECT_EQ(rc.mode, "jkali");
    EXPECT_EQ(rc.engine.max_iterations, 50u);
    EXPECT_EQ(rc.engine.seed, 7u);
    EXPECT_EQ(rc.engine.operator_space, "Suppression");
}

TEST(Config, OverridesAndErrors)
{
    RunConfig rc = resolve_config({{"mode", "jgenprog"}, {"navigation", "selective"}, {"ingredient_scope", "package"}});
    EXPECT_EQ(rc.engine.navigation, Navigation::Selective);
    EXPECT_EQ(rc.engine.ingredient_scope, IngredientScope::Module);
    EXPECT_THROW(resolve_config({{"colour", "blue"}}), std::invalid_argument);
    EXPECT_THROW(resolve_config({{"max_iterations", "-3"}}), std::invalid_argument);
    EXPECT_THROW(resolve_config({{"navigation", "sideways"}}), std::invalid_argument);
    EXPECT_THROW(resolve_config({{"mode", "nope"}}), std::invalid_argument);
    RunConfig w = resolve_config({{"operator_selection", "weighted"}, {"operator_weights", "replace:1"}});
    EXPECT_EQ(w.engine.operator_weights.at("replace"), 1.0);
}

TEST(Cli, ReportSchemaAndPatchFiles)
{
    auto dir = testing::scratch_dir("report");
    RunConfig rc = config_for("extra-increment", {{"mode", "jkali"}});
    rc.out_dir = dir;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_repair(rc, out, err), kExitRepaired) << err.str();
    auto report = nlohmann::json::parse(testing::read_file(dir / "report.json"));
    EXPECT_EQ(report["version"], kReportVersion);
    EXPECT_EQ(report["outcome"], "repaired");
    EXPECT_EQ(report["config"]["mode"], "jkali");
    for (const char* key : {"stop_reason", "tests", "failing_tests", "variants_validated", "solutions",
                            "validations_to_first_solution", "per_operator"})
        EXPECT_TRUE(report["stats"].contains(key)) << key;
    ASSERT_GE(report["patches"].size(), 1u);
    const auto& p = report["patches"][0];
    EXPECT_EQ(p["order"], 1);
    EXPECT_EQ(p["file"], patch_file_name(1));
    EXPECT_EQ(testing::read_file(dir / p["file"].get<std::string>()), p["diff"].get<std::string>());
    EXPECT_FALSE(p["transformations"].empty());

    // the written patch repairs the bug
    auto bug = testing::load_bug("extra-increment");
    auto sources = apply_patch(printed_sources(bug.project), p["diff"].get<std::string>());
    std::vector<SourceText> files;
    for (auto& [path, text] : sources) files.push_back({path, text});
    Baseline base = compute_baseline(bug.project, bug.suite, kDefaultStepBudget);
    EXPECT_TRUE(is_adequate(parse_project(files), bug.suite, base));
}

TEST(Cli, ExitCodes)
{
    std::ostringstream out, err;
    RunConfig ok = config_for("abs-sign", {{"mode", "jmutrepair"}});
    EXPECT_EQ(cmd_repair(ok, out, err), kExitRepaired);

    RunConfig zero = config_for("abs-sign", {{"max_seconds", "0"}});
    zero.out_dir = testing::scratch_dir("zero");
    EXPECT_EQ(cmd_repair(zero, out, err), kExitNotRepaired);
    auto report = nlohmann::json::parse(testing::read_file(zero.out_dir / "report.json"));
    EXPECT_TRUE(report["patches"].empty());

    RunConfig missing = config_for("no-such-bug");
    EXPECT_EQ(cmd_repair(missing, out, err), kExitError);

    // a project whose suite already passes
    auto dir = testing::scratch_dir("passing");
    fs::create_directories(dir / "src");
    auto fixed = printed_sources(testing::fixed_project("abs-sign"));
    for (const auto& [path, text] : fixed) {
        std::ofstream f(dir / "src" / path);
        f << text;
    }
    fs::copy_file(testing::corpus_dir() / "abs-sign" / "tests.json", dir / "tests.json");
    RunConfig passing = config_for("abs-sign");
    passing.project_dir = dir;
    std::ostringstream err2;
    EXPECT_EQ(cmd_repair(passing, out, err2), kExitError);
    EXPECT_NE(err2.str().find("nothing to repair"), std::string::npos) << err2.str();
}

TEST(Cli, ReportIsDeterministic)
{
    auto run = [](unsigned jobs) {
        RunConfig rc = config_for("safe-div", {{"mode", "tibra"}, {"seed", "3"}, {"max_solutions", "2"},
                                               {"jobs", std::to_string(jobs)}});
        auto r = run_repair(rc);
        r.report["config"].erase("jobs");
        return r.report.dump();
    };
    std::string a = run(1);
    EXPECT_EQ(a, run(1));
    EXPECT_EQ(a, run(2));
}

TEST(Cli, BenchRowsAndCsv)
{
    auto dir = testing::scratch_dir("bench");
    fs::create_directories(dir / "corpus");
    fs::copy(testing::corpus_dir() / "abs-sign", dir / "corpus" / "abs-sign", fs::copy_options::recursive);
    BenchOptions opt;
    opt.corpus = dir / "corpus";
    opt.modes = {"jmutrepair", "jkali"};
    opt.seeds = {1, 2, 3};
    opt.timing = false;
    auto rows = run_bench(opt);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.bug, "abs-sign");
        EXPECT_EQ(r.repaired, r.mode == "jmutrepair") << r.mode << " " << r.seed;
        EXPECT_TRUE(r.error.empty());
    }
    std::string csv = bench_csv(rows, false);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
    EXPECT_EQ(csv.find("bug,mode,seed,repaired"), 0u) << csv;
    EXPECT_EQ(csv, bench_csv(run_bench(opt), false));
}

}  // namespace
}  // namespace gvr
