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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "gvrepair/commands.hpp"
#include "gvrepair/config.hpp"
#include "gvrepair/parser.hpp"
#include "gvrepair/printer.hpp"
#include "gvrepair/presets.hpp"

namespace {

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("gvrepair");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("REPAIR_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct Flag {
    const char* names;
    const char* key;
    const char* help;
};

// Flags that map one-to-one onto config keys.
const std::vector<Flag> kSettingFlags = {
    {"--seed", "seed", "Random seed"},
    {"--max-solutions,--max_solutions", "max_solutions", "Stop after this many patches (0 = no limit)"},
    {"--max-iterations,--max_iterations", "max_iterations", "Iteration (generation) budget"},
    {"--max-seconds,--max_seconds", "max_seconds", "Wall-clock budget in seconds"},
    {"--navigation", "navigation", "exhaustive | selective | evolutionary"},
    {"--scope,--ingredient-scope,--ingredient_scope", "ingredient_scope", "file | module | global"},
    {"--granularity", "granularity", "statement | expression | logical-relational"},
    {"--jobs", "jobs", "Validation worker threads"},
    {"--point-selection,--point_selection", "point_selection", "uniform | weighted | sequential"},
    {"--operator-space,--operator_space", "operator_space", "Operator space name"},
    {"--operator-selection,--operator_selection", "operator_selection", "uniform | weighted | sequential"},
    {"--operator-weights,--operator_weights", "operator_weights", "name:weight,... for weighted selection"},
    {"--ingredient-selection,--ingredient_selection", "ingredient_selection",
     "uniform | similarity | name-probability"},
    {"--ingredient-transform,--ingredient_transform", "ingredient_transform",
     "none | random-var | name-probability | name-cluster"},
    {"--population", "population", "Evolutionary population size"},
    {"--p-cross,--p_cross", "p_cross", "Crossover probability"},
    {"--p-mut,--p_mut", "p_mut", "Mutation probability"},
    {"--step-budget,--step_budget", "step_budget", "Interpreter step budget per test"},
};

int format_files_cmd(const std::vector<std::string>& paths, bool in_place)
{
    for (const auto& path : paths) {
        try {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw std::invalid_argument("cannot read " + path);
            std::stringstream buf;
            buf << in.rdbuf();
            auto project = gvr::parse_project({{path, buf.str()}});
            std::string text = gvr::print_file(project.files.front());
            if (in_place) {
                std::ofstream(path, std::ios::binary) << text;
            } else {
                std::cout << text;
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return gvr::kExitError;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    setup_logging();
    CLI::App app{"gvrepair: generate-and-validate program repair for MiniLang"};
    app.require_subcommand(1);

    // repair
    auto* repair = app.add_subcommand("repair", "Repair one project");
    std::string project_dir, tests_path, config_path, out_dir, mode;
    std::vector<std::string> sets;
    std::vector<std::optional<std::string>> values(kSettingFlags.size());
    repair->add_option("project", project_dir, "Project directory (src/ and tests.json)")->required();
    repair->add_option("--tests", tests_path, "Test suite file (default <project>/tests.json)");
    repair->add_option("--config", config_path, "key = value configuration file");
    repair->add_option("--mode", mode, "Preset: jgenprog, jkali, jmutrepair, deeprepair-lite, cardumen, tibra, custom");
    repair->add_option("--out", out_dir, "Directory for report.json and patches");
    repair->add_option("--set", sets, "Extra key=value setting (repeatable)");
    for (std::size_t i = 0; i < kSettingFlags.size(); ++i)
        repair->add_option(kSettingFlags[i].names, values[i], kSettingFlags[i].help);

    // bench
    auto* bench = app.add_subcommand("bench", "Run every preset on a bug corpus");
    std::string corpus, modes = "jgenprog,jkali,jmutrepair,deeprepair-lite,cardumen,tibra", seeds = "1,2,3";
    std::string bench_out, bench_bugs;
    std::vector<std::string> bench_sets;
    bool no_timing = false;
    bench->add_option("corpus", corpus, "Corpus directory")->required();
    bench->add_option("--bugs", bench_bugs, "Comma-separated bug names (default: all)");
    bench->add_option("--modes", modes, "Comma-separated presets");
    bench->add_option("--seeds", seeds, "Comma-separated seeds");
    bench->add_option("--out", bench_out, "Directory for bench.csv and summary.csv");
    bench->add_option("--set", bench_sets, "Extra key=value setting applied to every run (repeatable)");
    bench->add_flag("--no-timing,--no_timing", no_timing, "Write '-' instead of wall times");

    auto* presets = app.add_subcommand("presets", "Print the preset table");

    auto* format = app.add_subcommand("format", "Print MiniLang files in canonical form");
    std::vector<std::string> format_files;
    bool in_place = false;
    format->add_option("files", format_files, "Source files")->required();
    format->add_flag("-i,--in-place", in_place, "Rewrite the files instead of printing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : gvr::kExitError;
    }

    auto parse_sets = [](const std::vector<std::string>& items, gvr::Settings& out) {
        for (const auto& s : items) {
            auto eq = s.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got " + s);
            out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
        }
    };

    if (presets->parsed()) {
        std::cout << gvr::presets_markdown();
        return 0;
    }

    if (format->parsed()) return format_files_cmd(format_files, in_place);

    if (bench->parsed()) {
        gvr::BenchOptions options;
        try {
            options.corpus = corpus;
            if (!bench_bugs.empty()) options.bugs = split_list(bench_bugs);
            options.modes = split_list(modes);
            for (const auto& s : split_list(seeds)) options.seeds.push_back(std::stoull(s));
            parse_sets(bench_sets, options.overrides);
            options.timing = !no_timing;
            options.out_dir = bench_out;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return gvr::kExitError;
        }
        return gvr::cmd_bench(options, std::cout, std::cerr);
    }

    gvr::RunConfig config;
    try {
        gvr::Settings settings;
        if (!config_path.empty()) settings = gvr::load_config_file(config_path);
        if (!mode.empty()) settings.emplace_back("mode", mode);
        for (std::size_t i = 0; i < kSettingFlags.size(); ++i)
            if (values[i]) settings.emplace_back(kSettingFlags[i].key, *values[i]);
        parse_sets(sets, settings);
        config = gvr::resolve_config(settings);
        config.project_dir = project_dir;
        config.tests_path = tests_path;
        config.out_dir = out_dir;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gvr::kExitError;
    }
    return gvr::cmd_repair(config, std::cout, std::cerr);
}
