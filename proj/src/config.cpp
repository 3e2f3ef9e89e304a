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

#include "gvrepair/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gvrepair/presets.hpp"

namespace gvr {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string normalize_key(std::string_view key)
{
    std::string k(key);
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view v)
{
    T out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw std::invalid_argument(std::string(key) + ": expected a non-negative integer, got '" + std::string(v) + "'");
    return out;
}

double parse_double(std::string_view key, std::string_view v)
{
    std::string s(v);
    std::size_t used = 0;
    double out = 0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument(std::string(key) + ": expected a number, got '" + s + "'");
    return out;
}

double parse_probability(std::string_view key, std::string_view v)
{
    double p = parse_double(key, v);
    if (p < 0 || p > 1) throw std::invalid_argument(std::string(key) + ": expected a value in [0, 1]");
    return p;
}

bool parse_bool(std::string_view key, std::string_view v)
{
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument(std::string(key) + ": expected true or false");
}

// "insert-before:0.5,replace:0.5"
std::map<std::string, double> parse_weights(std::string_view key, std::string_view v)
{
    std::map<std::string, double> out;
    std::size_t start = 0;
    while (start <= v.size()) {
        std::size_t comma = v.find(',', start);
        std::string_view item = trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
        if (!item.empty()) {
            std::size_t colon = item.rfind(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument(std::string(key) + ": expected name:weight pairs");
            out[std::string(trim(item.substr(0, colon)))] = parse_double(key, trim(item.substr(colon + 1)));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_weights(const std::map<std::string, double>& w)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : w) {
        if (!first) out << ",";
        out << k << ":" << v;
        first = false;
    }
    return out.str();
}

}  // namespace

Settings parse_config_text(std::string_view text)
{
    Settings out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
        start = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            // '#' inside a quoted value is kept
            auto quote = line.find('"');
            if (quote == std::string_view::npos || hash < quote) line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        out.emplace_back(normalize_key(key), std::string(value));
    }
    return out;
}

Settings load_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = {
        "navigation",       "granularity",          "point_selection",      "operator_space",
        "operator_selection", "operator_weights",   "ingredient_scope",     "ingredient_selection",
        "ingredient_transform", "fault_formula",    "max_suspicious",       "seed",
        "max_solutions",    "max_iterations",       "max_seconds",          "population",
        "p_mut",            "p_cross",              "points_per_iteration", "step_budget",
        "jobs",             "minimize",
    };
    return keys;
}

void apply_setting(EngineConfig& c, std::string_view raw_key, std::string_view value)
{
    const std::string key = normalize_key(raw_key);
    if (key == "navigation") c.navigation = navigation_from_string(value);
    else if (key == "granularity") c.granularity = granularity_from_string(value);
    else if (key == "point_selection") c.point_selection = strategy_from_string(value);
    else if (key == "operator_space") {
        space_by_name(value);
        c.operator_space = std::string(value);
    } else if (key == "operator_selection") c.operator_selection = strategy_from_string(value);
    else if (key == "operator_weights") c.operator_weights = parse_weights(key, value);
    else if (key == "ingredient_scope" || key == "scope") c.ingredient_scope = scope_from_string(value);
    else if (key == "ingredient_selection") c.ingredient_selection = selection_from_string(value);
    else if (key == "ingredient_transform") c.ingredient_transform = transform_from_string(value);
    else if (key == "fault_formula") {
        if (value == "ochiai") c.formula = Formula::Ochiai;
        else if (value == "tarantula") c.formula = Formula::Tarantula;
        else throw std::invalid_argument("fault_formula: expected ochiai or tarantula");
    } else if (key == "max_suspicious") c.max_suspicious = parse_unsigned<std::size_t>(key, value);
    else if (key == "seed") c.seed = parse_unsigned<std::uint64_t>(key, value);
    else if (key == "max_solutions") c.max_solutions = parse_unsigned<std::size_t>(key, value);
    else if (key == "max_iterations") c.max_iterations = parse_unsigned<std::size_t>(key, value);
    else if (key == "max_seconds") {
        c.max_seconds = parse_double(key, value);
        if (c.max_seconds < 0) throw std::invalid_argument("max_seconds must be >= 0");
    } else if (key == "population") c.population = parse_unsigned<std::size_t>(key, value);
    else if (key == "p_mut") c.p_mut = parse_probability(key, value);
    else if (key == "p_cross") c.p_cross = parse_probability(key, value);
    else if (key == "points_per_iteration") c.points_per_iteration = parse_unsigned<std::size_t>(key, value);
    else if (key == "step_budget") c.step_budget = parse_unsigned<std::uint64_t>(key, value);
    else if (key == "jobs") c.jobs = parse_unsigned<unsigned>(key, value);
    else if (key == "minimize") c.minimize = parse_bool(key, value);
    else throw std::invalid_argument("unknown config key: " + key);
}

RunConfig resolve_config(const Settings& settings)
{
    RunConfig rc;
    rc.mode = "jgenprog";
    for (const auto& [k, v] : settings)
        if (k == "mode") rc.mode = v;
    if (rc.mode != "custom") rc.engine = preset(rc.mode).engine_config();
    for (const auto& [k, v] : settings) {
        if (k == "mode") continue;
        apply_setting(rc.engine, k, v);
    }
    if (rc.engine.step_budget == 0) throw std::invalid_argument("step_budget must be >= 1");
    return rc;
}

nlohmann::ordered_json config_to_json(const RunConfig& rc)
{
    const EngineConfig& c = rc.engine;
    nlohmann::ordered_json j;
    j["mode"] = rc.mode;
    j["project"] = rc.project_dir.generic_string();
    j["navigation"] = to_string(c.navigation);
    j["granularity"] = to_string(c.granularity);
    j["point_selection"] = to_string(c.point_selection);
    j["operator_space"] = c.operator_space;
    j["operator_selection"] = to_string(c.operator_selection);
    j["operator_weights"] = format_weights(c.operator_weights);
    j["ingredient_scope"] = to_string(c.ingredient_scope);
    j["ingredient_selection"] = to_string(c.ingredient_selection);
    j["ingredient_transform"] = to_string(c.ingredient_transform);
    j["fault_formula"] = c.formula == Formula::Ochiai ? "ochiai" : "tarantula";
    j["max_suspicious"] = c.max_suspicious;
    j["seed"] = c.seed;
    j["max_solutions"] = c.max_solutions;
    j["max_iterations"] = c.max_iterations;
    j["max_seconds"] = c.max_seconds;
    j["population"] = c.population;
    j["p_mut"] = c.p_mut;
    j["p_cross"] = c.p_cross;
    j["points_per_iteration"] = c.points_per_iteration;
    j["step_budget"] = c.step_budget;
    j["jobs"] = c.jobs;
    j["minimize"] = c.minimize;
    return j;
}

}  // namespace gvr
