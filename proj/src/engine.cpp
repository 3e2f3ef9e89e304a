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

#include "gvrepair/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "gvrepair/parallel.hpp"
#include "gvrepair/printer.hpp"
#include "gvrepair/types.hpp"

namespace gvr {

std::string_view to_string(Navigation n)
{
    switch (n) {
    case Navigation::Exhaustive: return "exhaustive";
    case Navigation::Selective: return "selective";
    case Navigation::Evolutionary: return "evolutionary";
    }
    return "?";
}

std::string_view to_string(SelectionStrategy s)
{
    switch (s) {
    case SelectionStrategy::Uniform: return "uniform";
    case SelectionStrategy::Weighted: return "weighted";
    case SelectionStrategy::Sequential: return "sequential";
    }
    return "?";
}

Navigation navigation_from_string(std::string_view name)
{
    if (name == "exhaustive") return Navigation::Exhaustive;
    if (name == "selective") return Navigation::Selective;
    if (name == "evolutionary") return Navigation::Evolutionary;
    throw std::invalid_argument("unknown navigation: " + std::string(name));
}

SelectionStrategy strategy_from_string(std::string_view name)
{
    if (name == "uniform" || name == "uniform-random" || name == "random") return SelectionStrategy::Uniform;
    if (name == "weighted" || name == "weighted-random") return SelectionStrategy::Weighted;
    if (name == "sequential") return SelectionStrategy::Sequential;
    throw std::invalid_argument("unknown selection strategy: " + std::string(name));
}

// ---------------------------------------------------------------------------
// modification points and selection

namespace {

bool is_expression_point(NodeKind k)
{
    return k == NodeKind::Binary || k == NodeKind::Unary || k == NodeKind::Call || k == NodeKind::Index ||
           k == NodeKind::ArrayLit;
}

bool is_logical_relational_point(const Node& n)
{
    if (n.kind == NodeKind::Binary) return is_relational(n.binary_op()) || is_logical(n.binary_op());
    return n.kind == NodeKind::Unary && n.unary_op() == UnaryOp::Not;
}

}  // namespace

std::vector<ModificationPoint> create_modification_points(const Project& project,
                                                          const std::vector<SuspiciousLocation>& suspicious,
                                                          Granularity granularity)
{
    ProjectIndex index(project);
    std::vector<ModificationPoint> out;
    for (const auto& loc : suspicious) {
        const NodeRef* ref = index.find(loc.statement);
        if (ref == nullptr || !is_statement(ref->node->kind)) continue;
        const Node& stmt = *ref->node;
        if (granularity == Granularity::Statement) {
            out.push_back({stmt.id, stmt.id, granularity, loc.suspiciousness});
            continue;
        }
        for (std::size_t c = 0; c < stmt.children.size(); ++c) {
            const Node& child = stmt.children[c];
            if (is_statement(child.kind)) continue;
            bool lhs = stmt.kind == NodeKind::Assign && c == 0;
            walk(child, [&](const Node& n) {
                bool take = granularity == Granularity::Expression ? is_expression_point(n.kind) && !lhs
                                                                   : is_logical_relational_point(n);
                if (take) out.push_back({n.id, stmt.id, granularity, loc.suspiciousness});
                return true;
            });
        }
    }
    return out;
}

std::vector<std::size_t> sequential_order(const std::vector<ModificationPoint>& points)
{
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].suspiciousness != points[b].suspiciousness)
            return points[a].suspiciousness > points[b].suspiciousness;
        return points[a].target < points[b].target;
    });
    return order;
}

std::vector<std::size_t> select_point_indices(const std::vector<ModificationPoint>& points, SelectionStrategy strategy,
                                              std::size_t count, Rng& rng, const std::vector<bool>& eligible)
{
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (eligible.empty() || eligible[i]) pool.push_back(i);
    std::vector<std::size_t> out;
    if (strategy == SelectionStrategy::Sequential) {
        for (std::size_t i : sequential_order(points)) {
            if (out.size() >= count) break;
            if (eligible.empty() || eligible[i]) out.push_back(i);
        }
        return out;
    }
    while (out.size() < count && !pool.empty()) {
        std::size_t pick = 0;
        if (strategy == SelectionStrategy::Weighted) {
            std::vector<double> w;
            double total = 0;
            for (std::size_t i : pool) {
                w.push_back(std::max(0.0, points[i].suspiciousness));
                total += w.back();
            }
            pick = total > 0 ? rng.weighted(w) : rng.below(pool.size());
        } else {
            pick = rng.below(pool.size());
        }
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

std::vector<ModificationPoint> select_points(const std::vector<ModificationPoint>& points, SelectionStrategy strategy,
                                             std::size_t count, Rng& rng)
{
    if (points.empty()) throw std::invalid_argument("select_points: no modification points");
    if (count == 0) throw std::invalid_argument("select_points: count must be >= 1");
    std::vector<ModificationPoint> out;
    for (std::size_t i : select_point_indices(points, strategy, count, rng)) out.push_back(points[i]);
    return out;
}

void check_operator_weights(const OperatorSpace& space, SelectionStrategy strategy,
                            const std::map<std::string, double>& weights)
{
    if (strategy != SelectionStrategy::Weighted) return;
    if (weights.empty()) throw std::invalid_argument("missing-weights: weighted operator selection needs weights");
    double total = 0;
    for (const auto& [name, w] : weights) {
        bool known = std::any_of(space.operators.begin(), space.operators.end(),
                                 [&](const OperatorPtr& op) { return op->name() == name; });
        if (!known) throw std::invalid_argument("missing-weights: unknown operator " + name);
        if (w < 0) throw std::invalid_argument("missing-weights: negative weight for " + name);
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("missing-weights: weights must sum to 1");
}

OperatorPtr select_operator_among(const std::vector<OperatorPtr>& candidates, SelectionStrategy strategy,
                                  const std::map<std::string, double>& weights, Rng& rng)
{
    if (candidates.empty()) return nullptr;
    switch (strategy) {
    case SelectionStrategy::Sequential: return candidates.front();
    case SelectionStrategy::Uniform: return candidates[rng.below(candidates.size())];
    case SelectionStrategy::Weighted: {
        std::vector<double> w;
        double total = 0;
        for (const auto& op : candidates) {
            auto it = weights.find(op->name());
            w.push_back(it == weights.end() ? 0.0 : it->second);
            total += w.back();
        }
        if (total <= 0) return nullptr;
        return candidates[rng.weighted(w)];
    }
    }
    return nullptr;
}

OperatorPtr select_operator(const OperatorSpace& space, SelectionStrategy strategy,
                            const std::map<std::string, double>& weights, Rng& rng)
{
    if (space.operators.empty()) throw std::invalid_argument("select_operator: empty operator space");
    check_operator_weights(space, strategy, weights);
    return select_operator_among(space.operators, strategy, weights, rng);
}

// ---------------------------------------------------------------------------
// engine

RepairEngine::RepairEngine(Project buggy, TestSuite suite, EngineConfig config)
    : buggy_(std::move(buggy)),
      suite_(std::move(suite)),
      config_(std::move(config)),
      space_(space_by_name(config_.operator_space)),
      ingredient_rng_(config_.seed, Stream::Ingredients),
      transform_rng_(config_.seed, Stream::Transform)
{
    if (suite_.empty()) throw std::invalid_argument("empty test suite");
    check_operator_weights(space_, config_.operator_selection, config_.operator_weights);
    for (const auto& op : space_.operators)
        if (op->target_granularity() != config_.granularity)
            throw std::invalid_argument("operator space " + space_.name + " does not work at " +
                                        std::string(to_string(config_.granularity)) + " granularity");
    if (config_.points_per_iteration == 0) throw std::invalid_argument("points_per_iteration must be >= 1");
    if (config_.population == 0) throw std::invalid_argument("population must be >= 1");
    buggy_ctx_ = std::make_unique<OperatorContext>(buggy_);
    names_ = NameFrequencyModel(buggy_);
    if (config_.ingredient_selection == IngredientSelection::Similarity) similarity_ = SimilarityModel(buggy_);
}

RepairEngine::~RepairEngine() = default;

const Baseline& RepairEngine::baseline() const
{
    if (!baseline_) throw std::logic_error("baseline requested before localization");
    return *baseline_;
}

void RepairEngine::localize()
{
    if (localized_) return;
    matrix_ = run_suite(buggy_, suite_, config_.step_budget, config_.jobs);
    suspicious_ = filter_suspicious(suspiciousness(matrix_, config_.formula), config_.max_suspicious);
    points_ = create_modification_points(buggy_, suspicious_, config_.granularity);
    baseline_ = std::make_unique<Baseline>(compute_baseline(buggy_, suite_, config_.step_budget));
    localized_ = true;
}

const IngredientPool& RepairEngine::pool(Granularity granularity)
{
    auto& slot = granularity == Granularity::Expression ? expression_pool_ : statement_pool_;
    if (!slot) {
        slot = std::make_unique<IngredientPool>(build_pool(buggy_, config_.ingredient_scope, granularity));
        ++pool_builds_;
    }
    return *slot;
}

std::optional<Transformation> RepairEngine::create_transformation(const OperatorContext& ctx,
                                                                  const ModificationPoint& point,
                                                                  const OperatorPtr& op,
                                                                  const std::string& cache_prefix, bool sequential)
{
    const NodeRef* ref = ctx.index.find(point.target);
    if (ref == nullptr || !op->accepts(ctx, point.target)) return std::nullopt;
    if (!op->needs_ingredient()) {
        if (!cache_.insert(cache_prefix + AttemptCache::key(point.target, op->name(), ""))) return std::nullopt;
        if (!op->rewrite(ctx, point.target, nullptr)) return std::nullopt;
        return Transformation{point, op, std::nullopt};
    }

    const IngredientPool& p = pool(op->target_granularity());
    const auto& entries = p.entries(p.key_for(ctx.project.files[ref->file]));
    const Environment env = scope_at(ctx.index, ctx.types, point.target);
    const bool expression = op->target_granularity() == Granularity::Expression;
    const Type target_type = expression ? ctx.types.infer(*ref->node, env) : Type::void_();
    SelectionContext sctx{ref->function ? ref->function->name : "", &similarity_, &names_};
    auto raw_key = [&](const Ingredient& ing) {
        return cache_prefix + AttemptCache::key(point.target, op->name(), "raw:" + ing.printed);
    };

    for (;;) {
        std::vector<const Ingredient*> candidates;
        for (const auto& ing : entries) {
            if (expression && !compatible(target_type, ing.type)) continue;
            if (!cache_.contains(raw_key(ing))) candidates.push_back(&ing);
        }
        if (candidates.empty()) return std::nullopt;
        const Ingredient* pick = sequential
                                     ? candidates.front()
                                     : select_ingredient(candidates, config_.ingredient_selection, sctx, ingredient_rng_);
        for (auto& concrete : transform_ingredient(*pick, env, config_.ingredient_transform, &names_, transform_rng_)) {
            std::string form = expression ? print_expression(concrete) : print_statement(concrete);
            if (!cache_.insert(cache_prefix + AttemptCache::key(point.target, op->name(), form))) continue;
            auto nodes = op->rewrite(ctx, point.target, &concrete);
            if (!nodes) continue;
            if (nodes->size() == 1 && structurally_equal(nodes->front(), *ref->node)) continue;  // no-op
            return Transformation{point, op, std::move(concrete)};
        }
        cache_.insert(raw_key(*pick));
    }
}

// ---------------------------------------------------------------------------
// navigation

struct RepairEngine::Candidate {
    std::vector<Transformation> transformations;
    std::optional<Project> project;
    std::size_t iteration = 0;
    std::size_t id = 0;
    std::size_t skipped = 0;  // failed transformation attempts preceding this candidate

    std::string key;
    bool well_typed = false;
    bool memo_hit = false;
    ValidationResult result;
};

// Generations in a row without any offspring before evolution gives up.
constexpr std::size_t kBarrenGenerations = 20;

class RepairEngine::Runner {
public:
    explicit Runner(RepairEngine& engine)
        : e_(engine),
          cfg_(engine.config_),
          start_(std::chrono::steady_clock::now()),
          point_rng_(cfg_.seed, Stream::Points),
          op_rng_(cfg_.seed, Stream::Operators),
          cross_rng_(cfg_.seed, Stream::Crossover),
          mut_rng_(cfg_.seed, Stream::Mutation)
    {
    }

    SearchResult run()
    {
        e_.localize();
        stats_.tests = e_.suite_.size();
        stats_.failing_tests = e_.baseline_->failing;
        stats_.suspicious = e_.suspicious_.size();
        stats_.points = e_.points_.size();
        if (e_.points_.empty()) {
            stats_.stop_reason = "no-search-space";
        } else if (cfg_.navigation == Navigation::Evolutionary) {
            evolutionary();
        } else {
            linear();
        }
        stats_.pool_builds = e_.pool_builds_;
        spdlog::info("search stopped ({}): {} validated, {} solutions", stats_.stop_reason, stats_.validated,
                     stats_.solutions);
        return {std::move(solutions_), std::move(stats_)};
    }

private:
    struct Memo {
        bool well_typed;
        ValidationResult result;
    };

    bool out_of_time() const
    {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        return elapsed.count() >= cfg_.max_seconds;
    }

    bool enough_solutions() const { return cfg_.max_solutions > 0 && solutions_.size() >= cfg_.max_solutions; }

    std::vector<OperatorPtr> applicable(const OperatorContext& ctx, std::size_t point,
                                        const std::vector<bool>* exhausted) const
    {
        std::vector<OperatorPtr> out;
        const auto& ops = e_.space_.operators;
        for (std::size_t o = 0; o < ops.size(); ++o) {
            if (exhausted && (*exhausted)[o]) continue;
            if (ops[o]->accepts(ctx, e_.points_[point].target)) out.push_back(ops[o]);
        }
        return out;
    }

    std::size_t op_index(const OperatorPtr& op) const
    {
        const auto& ops = e_.space_.operators;
        return static_cast<std::size_t>(std::find(ops.begin(), ops.end(), op) - ops.begin());
    }

    // Type-checks and validates a batch; identical programs are evaluated once.
    void evaluate(std::vector<Candidate>& batch, bool short_circuit)
    {
        std::vector<std::size_t> fresh;
        std::unordered_map<std::string, std::size_t> first;
        std::vector<std::pair<std::size_t, std::size_t>> copies;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            auto& c = batch[i];
            if (!c.project) continue;
            c.key = program_key(*c.project);
            if (auto it = memo_.find(c.key); it != memo_.end()) {
                c.memo_hit = true;
                c.well_typed = it->second.well_typed;
                c.result = it->second.result;
            } else if (auto jt = first.find(c.key); jt != first.end()) {
                copies.emplace_back(i, jt->second);
            } else {
                first.emplace(c.key, i);
                fresh.push_back(i);
            }
        }
        parallel_for(fresh.size(), cfg_.jobs, [&](std::size_t k) {
            auto& c = batch[fresh[k]];
            c.well_typed = !check_project(*c.project).has_value();
            if (c.well_typed) c.result = validate_variant(*c.project, e_.suite_, *e_.baseline_, short_circuit);
        });
        for (std::size_t i : fresh) memo_.emplace(batch[i].key, Memo{batch[i].well_typed, batch[i].result});
        for (auto [i, j] : copies) {
            batch[i].memo_hit = true;
            batch[i].well_typed = batch[j].well_typed;
            batch[i].result = batch[j].result;
        }
    }

    // Accounts one evaluated candidate; returns its fitness if it was validated.
    std::optional<std::size_t> process(const Candidate& c)
    {
        stats_.not_applicable += c.skipped;
        if (!c.project) {
            ++stats_.not_applicable;
            return std::nullopt;
        }
        auto& per_op = stats_.per_operator[c.transformations.back().op->name()];
        ++stats_.generated;
        ++per_op.generated;
        if (!c.well_typed) {
            ++stats_.ill_typed;
            return std::nullopt;
        }
        ++stats_.validated;
        ++per_op.validated;
        if (c.memo_hit) ++stats_.memo_hits;
        else stats_.test_runs += c.result.executed;
        std::size_t f = fitness(c.result);
        if (f == 0 && solution_keys_.insert(c.key).second) {
            ++stats_.solutions;
            ++per_op.solutions;
            if (!stats_.first_solution_iteration) {
                stats_.first_solution_iteration = c.iteration;
                stats_.validations_to_first_solution = stats_.validated;
            }
            solutions_.push_back({c.transformations, c.iteration});
            spdlog::debug("solution at iteration {}: {}", c.iteration, c.transformations.back().describe());
        }
        return f;
    }

    // Exhaustive and selective navigation: one transformation set per iteration.
    void linear()
    {
        const bool exhaustive = cfg_.navigation == Navigation::Exhaustive;
        const auto& points = e_.points_;
        const std::size_t nops = e_.space_.operators.size();
        std::vector<std::vector<bool>> exhausted(points.size(), std::vector<bool>(nops, false));
        std::vector<bool> live(points.size(), true);
        const std::vector<std::size_t> order = sequential_order(points);
        std::size_t cursor = 0, op_cursor = 0, planned = 0;
        std::string end_reason = "exhausted";

        auto next_exhaustive = [&](Candidate& c) -> bool {
            while (cursor < order.size()) {
                if (op_cursor >= nops) {
                    ++cursor;
                    op_cursor = 0;
                    continue;
                }
                const auto& point = points[order[cursor]];
                const auto& op = e_.space_.operators[op_cursor];
                auto t = e_.create_transformation(*e_.buggy_ctx_, point, op, "", true);
                if (!t) {
                    ++op_cursor;
                    continue;
                }
                c.transformations.push_back(std::move(*t));
                return true;
            }
            return false;
        };

        auto next_selective = [&](Candidate& c) -> bool {
            std::vector<bool> chosen(points.size(), false);
            while (c.transformations.size() < cfg_.points_per_iteration) {
                std::vector<bool> eligible = live;
                for (std::size_t i = 0; i < points.size(); ++i)
                    if (chosen[i]) eligible[i] = false;
                auto pick = select_point_indices(points, cfg_.point_selection, 1, point_rng_, eligible);
                if (pick.empty()) break;
                std::size_t p = pick.front();
                auto ops = applicable(*e_.buggy_ctx_, p, &exhausted[p]);
                OperatorPtr op = select_operator_among(ops, cfg_.operator_selection, cfg_.operator_weights, op_rng_);
                if (!op) {
                    live[p] = false;
                    continue;
                }
                auto t = e_.create_transformation(*e_.buggy_ctx_, points[p], op);
                if (!t) {
                    exhausted[p][op_index(op)] = true;
                    ++c.skipped;
                    continue;
                }
                chosen[p] = true;
                c.transformations.push_back(std::move(*t));
            }
            return !c.transformations.empty();
        };

        auto next = [&](Candidate& c) -> bool {
            if (planned >= cfg_.max_iterations) {
                end_reason = "max-iterations";
                return false;
            }
            if (!(exhaustive ? next_exhaustive(c) : next_selective(c))) return false;
            c.iteration = ++planned;
            if (c.transformations.size() == 1) c.project = apply_transformation(*e_.buggy_ctx_, c.transformations[0]);
            else c.project = materialize(e_.buggy_, c.transformations);
            return true;
        };

        const std::size_t batch_size = std::max(1u, cfg_.jobs);
        for (;;) {
            if (out_of_time()) {
                stats_.stop_reason = "max-seconds";
                return;
            }
            std::vector<Candidate> batch;
            std::size_t trailing_skips = 0;
            while (batch.size() < batch_size) {
                Candidate c;
                if (!next(c)) {
                    trailing_skips = c.skipped;
                    break;
                }
                batch.push_back(std::move(c));
            }
            evaluate(batch, true);
            for (auto& c : batch) {
                if (out_of_time()) {
                    stats_.stop_reason = "max-seconds";
                    return;
                }
                stats_.iterations = c.iteration;
                process(c);
                if (enough_solutions()) {
                    stats_.stop_reason = "max-solutions";
                    return;
                }
            }
            if (batch.size() < batch_size) {
                stats_.not_applicable += trailing_skips;
                stats_.stop_reason = end_reason;
                return;
            }
        }
    }

    // One mutation of `parent` at a selected point, or nullopt.
    std::optional<Candidate> mutate(const ProgramVariant& parent, std::size_t& skipped)
    {
        OperatorContext ctx(parent.project);
        std::string prefix;
        for (const auto& t : parent.transformations) prefix += t.describe() + "\x1e";
        const auto& points = e_.points_;
        std::vector<bool> eligible(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) eligible[i] = ctx.index.find(points[i].target) != nullptr;
        for (int attempt = 0; attempt < 3; ++attempt) {
            auto pick = select_point_indices(points, cfg_.point_selection, 1, point_rng_, eligible);
            if (pick.empty()) return std::nullopt;
            std::size_t p = pick.front();
            auto ops = applicable(ctx, p, nullptr);
            OperatorPtr op = select_operator_among(ops, cfg_.operator_selection, cfg_.operator_weights, op_rng_);
            if (!op) {
                eligible[p] = false;
                continue;
            }
            auto t = e_.create_transformation(ctx, points[p], op, prefix);
            if (!t) {
                ++skipped;
                continue;
            }
            Candidate c;
            c.transformations = parent.transformations;
            c.transformations.push_back(*t);
            c.project = apply_transformation(ctx, *t);
            return c;
        }
        return std::nullopt;
    }

    void evolutionary()
    {
        const ProgramVariant root{0, {}, e_.buggy_, e_.baseline_->failing, 0};
        std::vector<ProgramVariant> population;
        std::size_t next_id = 1;
        std::size_t generation = 0;
        std::size_t barren = 0;

        while (generation < cfg_.max_iterations) {
            if (out_of_time()) {
                stats_.stop_reason = "max-seconds";
                return;
            }
            ++generation;
            std::vector<Candidate> offspring;
            std::size_t skipped = 0;
            if (population.empty()) {
                for (std::size_t attempt = 0; offspring.size() < cfg_.population && attempt < 4 * cfg_.population;
                     ++attempt)
                    if (auto c = mutate(root, skipped)) offspring.push_back(std::move(*c));
            } else {
                for (const auto& parent : population) {
                    if (mut_rng_.uniform01() >= cfg_.p_mut) continue;
                    if (auto c = mutate(parent, skipped)) offspring.push_back(std::move(*c));
                }
                // The original program stays a parent so a population stuck on a
                // dead-end edit can still restart from scratch.
                if (auto c = mutate(root, skipped)) offspring.push_back(std::move(*c));
                std::vector<std::size_t> mates(population.size());
                for (std::size_t i = 0; i < mates.size(); ++i) mates[i] = i;
                cross_rng_.shuffle(mates);
                for (std::size_t i = 0; i + 1 < mates.size(); i += 2) {
                    if (cross_rng_.uniform01() >= cfg_.p_cross) continue;
                    const auto& a = population[mates[i]].transformations;
                    const auto& b = population[mates[i + 1]].transformations;
                    std::size_t cut_a = cross_rng_.below(a.size() + 1);
                    std::size_t cut_b = cross_rng_.below(b.size() + 1);
                    for (int side = 0; side < 2; ++side) {
                        const auto& head = side == 0 ? a : b;
                        const auto& tail = side == 0 ? b : a;
                        std::size_t h = side == 0 ? cut_a : cut_b;
                        std::size_t t = side == 0 ? cut_b : cut_a;
                        Candidate c;
                        c.transformations.assign(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(h));
                        c.transformations.insert(c.transformations.end(), tail.begin() + static_cast<std::ptrdiff_t>(t),
                                                 tail.end());
                        if (c.transformations.empty()) continue;
                        c.project = materialize(e_.buggy_, c.transformations);
                        offspring.push_back(std::move(c));
                    }
                }
            }
            for (auto& c : offspring) {
                c.iteration = generation;
                c.id = next_id++;
            }
            if (!offspring.empty()) offspring.front().skipped = skipped;
            else stats_.not_applicable += skipped;

            evaluate(offspring, false);
            std::vector<ProgramVariant> survivors = population;
            std::set<std::string> keys;
            for (const auto& v : population) keys.insert(program_key(v.project));
            stats_.iterations = generation;
            for (auto& c : offspring) {
                if (out_of_time()) {
                    stats_.stop_reason = "max-seconds";
                    return;
                }
                auto f = process(c);
                if (enough_solutions()) {
                    stats_.stop_reason = "max-solutions";
                    return;
                }
                if (f && keys.insert(c.key).second)
                    survivors.push_back({c.id, std::move(c.transformations), std::move(*c.project), f, generation});
            }
            std::stable_sort(survivors.begin(), survivors.end(), [](const ProgramVariant& x, const ProgramVariant& y) {
                if (*x.fitness != *y.fitness) return *x.fitness < *y.fitness;
                // Smaller edits first to keep bloat down, then newer variants so
                // neutral offspring keep the population moving.
                if (x.transformations.size() != y.transformations.size())
                    return x.transformations.size() < y.transformations.size();
                if (x.generation != y.generation) return x.generation > y.generation;
                return x.id < y.id;
            });
            if (survivors.size() > cfg_.population) survivors.resize(cfg_.population);
            barren = offspring.empty() ? barren + 1 : 0;
            population = std::move(survivors);
            if (barren >= kBarrenGenerations) {
                stats_.stop_reason = "exhausted";
                return;
            }
        }
        stats_.stop_reason = "max-iterations";
    }

    RepairEngine& e_;
    const EngineConfig& cfg_;
    std::chrono::steady_clock::time_point start_;
    Rng point_rng_;
    Rng op_rng_;
    Rng cross_rng_;
    Rng mut_rng_;
    std::unordered_map<std::string, Memo> memo_;
    std::set<std::string> solution_keys_;
    std::vector<Solution> solutions_;
    SearchStats stats_;
};

SearchResult RepairEngine::search() { return Runner(*this).run(); }

std::vector<Patch> RepairEngine::refine(const SearchResult& result) const
{
    return refine_patches(buggy_, suite_, baseline(), result.solutions, RefineOptions{config_.minimize});
}

}  // namespace gvr
