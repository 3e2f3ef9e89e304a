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

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvrepair/fault_localization.hpp"
#include "gvrepair/ingredients.hpp"
#include "gvrepair/operators.hpp"
#include "gvrepair/rng.hpp"
#include "gvrepair/validate.hpp"
#include "gvrepair/variant.hpp"

namespace gvr {

enum class Navigation { Exhaustive, Selective, Evolutionary };
enum class SelectionStrategy { Uniform, Weighted, Sequential };

std::string_view to_string(Navigation n);
std::string_view to_string(SelectionStrategy s);
Navigation navigation_from_string(std::string_view name);
SelectionStrategy strategy_from_string(std::string_view name);

/// Every extension-point choice and budget of one repair run.
struct EngineConfig {
    Granularity granularity = Granularity::Statement;
    Navigation navigation = Navigation::Selective;
    SelectionStrategy point_selection = SelectionStrategy::Weighted;
    std::string operator_space = "IRR-statements";
    SelectionStrategy operator_selection = SelectionStrategy::Uniform;
    std::map<std::string, double> operator_weights;
    IngredientScope ingredient_scope = IngredientScope::Module;
    IngredientSelection ingredient_selection = IngredientSelection::Uniform;
    IngredientTransform ingredient_transform = IngredientTransform::None;
    Formula formula = Formula::Ochiai;
    std::size_t max_suspicious = 100;

    std::uint64_t seed = 0;
    std::size_t max_solutions = 1;  // 0 = unlimited
    std::size_t max_iterations = 2000;
    double max_seconds = 600;
    std::size_t population = 10;
    double p_mut = 1.0;
    double p_cross = 0.25;
    std::size_t points_per_iteration = 1;
    std::uint64_t step_budget = kDefaultStepBudget;
    unsigned jobs = 1;
    bool minimize = true;
};

/// Points of the requested granularity inside the suspicious statements, in
/// the order of `suspicious` and pre-order within a statement. Expression
/// points are binary, unary, call, index and array-literal nodes that are
/// not assignment targets; logical-relational points are relational or
/// logical binaries and `!` expressions.
std::vector<ModificationPoint> create_modification_points(const Project& project,
                                                          const std::vector<SuspiciousLocation>& suspicious,
                                                          Granularity granularity);

/// Indices of `count` distinct points chosen by `strategy` among those with
/// `eligible[i]` set (all when empty). Weighted falls back to uniform when
/// every eligible point has zero suspiciousness.
std::vector<std::size_t> select_point_indices(const std::vector<ModificationPoint>& points, SelectionStrategy strategy,
                                              std::size_t count, Rng& rng, const std::vector<bool>& eligible = {});

std::vector<ModificationPoint> select_points(const std::vector<ModificationPoint>& points, SelectionStrategy strategy,
                                             std::size_t count, Rng& rng);

/// Sequential point order: descending suspiciousness, ties by ascending id.
std::vector<std::size_t> sequential_order(const std::vector<ModificationPoint>& points);

/// Picks one operator from `candidates` (a subsequence of a space). Weighted
/// selection requires weights for the space and renormalizes them over the
/// candidates; returns nullptr if all candidate weights are zero.
OperatorPtr select_operator_among(const std::vector<OperatorPtr>& candidates, SelectionStrategy strategy,
                                  const std::map<std::string, double>& weights, Rng& rng);

/// Throws std::invalid_argument("missing-weights") for weighted selection
/// without weights summing to 1.
OperatorPtr select_operator(const OperatorSpace& space, SelectionStrategy strategy,
                            const std::map<std::string, double>& weights, Rng& rng);

void check_operator_weights(const OperatorSpace& space, SelectionStrategy strategy,
                            const std::map<std::string, double>& weights);

struct OperatorStats {
    std::size_t generated = 0;
    std::size_t validated = 0;
    std::size_t solutions = 0;
};

struct SearchStats {
    std::size_t tests = 0;
    std::size_t failing_tests = 0;
    std::size_t suspicious = 0;
    std::size_t points = 0;
    std::size_t iterations = 0;
    std::size_t generated = 0;       // variants materialized
    std::size_t not_applicable = 0;  // transformations that could not be created or applied
    std::size_t ill_typed = 0;       // variants rejected by the static checker
    std::size_t validated = 0;       // variants whose fitness was obtained
    std::size_t memo_hits = 0;       // of which reused an earlier identical program
    std::size_t test_runs = 0;
    std::size_t solutions = 0;
    std::size_t pool_builds = 0;
    std::optional<std::size_t> first_solution_iteration;
    std::optional<std::size_t> validations_to_first_solution;
    std::map<std::string, OperatorStats> per_operator;
    std::string stop_reason;
};

struct SearchResult {
    std::vector<Solution> solutions;
    SearchStats stats;
};

/// Generate-and-validate search over one buggy program.
class RepairEngine {
public:
    RepairEngine(Project buggy, TestSuite suite, EngineConfig config);
    ~RepairEngine();

    /// Fault localization plus navigation. Throws NoFailingTests.
    SearchResult search();

    /// search() followed by refine_patches().
    std::vector<Patch> refine(const SearchResult& result) const;

    const Project& buggy() const { return buggy_; }
    const TestSuite& suite() const { return suite_; }
    const EngineConfig& config() const { return config_; }
    const Baseline& baseline() const;
    const std::vector<ModificationPoint>& points() const { return points_; }
    const SpectrumMatrix& spectrum() const { return matrix_; }
    const OperatorSpace& space() const { return space_; }

    /// Runs fault localization and builds the modification points; search()
    /// calls it when needed.
    void localize();

    /// Creates a transformation at `point` on the program of `ctx`. Ingredient
    /// operators lazily build the pool, select an untried ingredient and
    /// transform it; nullopt once nothing untried remains. `cache_prefix`
    /// separates attempt caches (evolutionary parents). With `sequential`
    /// ingredients are taken in pool order.
    std::optional<Transformation> create_transformation(const OperatorContext& ctx, const ModificationPoint& point,
                                                        const OperatorPtr& op, const std::string& cache_prefix = "",
                                                        bool sequential = false);

    std::size_t pool_builds() const { return pool_builds_; }

private:
    struct Candidate;
    class Runner;

    const IngredientPool& pool(Granularity granularity);

    Project buggy_;
    TestSuite suite_;
    EngineConfig config_;
    OperatorSpace space_;
    SpectrumMatrix matrix_;
    std::vector<SuspiciousLocation> suspicious_;
    std::vector<ModificationPoint> points_;
    std::unique_ptr<Baseline> baseline_;
    std::unique_ptr<OperatorContext> buggy_ctx_;
    std::unique_ptr<IngredientPool> statement_pool_;
    std::unique_ptr<IngredientPool> expression_pool_;
    std::size_t pool_builds_ = 0;
    NameFrequencyModel names_;
    SimilarityModel similarity_;
    AttemptCache cache_;
    Rng ingredient_rng_;
    Rng transform_rng_;
    bool localized_ = false;
};

}  // namespace gvr
