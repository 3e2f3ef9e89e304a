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

#include "gvrepair/ingredients.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "gvrepair/printer.hpp"

namespace gvr {

std::string_view to_string(IngredientScope s)
{
    switch (s) {
    case IngredientScope::File: return "file";
    case IngredientScope::Module: return "module";
    case IngredientScope::Global: return "global";
    }
    return "?";
}

std::string_view to_string(IngredientSelection s)
{
    switch (s) {
    case IngredientSelection::Uniform: return "uniform";
    case IngredientSelection::Similarity: return "similarity";
    case IngredientSelection::NameProbability: return "name-probability";
    }
    return "?";
}

std::string_view to_string(IngredientTransform t)
{
    switch (t) {
    case IngredientTransform::None: return "none";
    case IngredientTransform::RandomVar: return "random-var";
    case IngredientTransform::NameProbability: return "name-probability";
    case IngredientTransform::NameCluster: return "name-cluster";
    }
    return "?";
}

IngredientScope scope_from_string(std::string_view name)
{
    if (name == "file") return IngredientScope::File;
    if (name == "module" || name == "package") return IngredientScope::Module;
    if (name == "global") return IngredientScope::Global;
    throw std::invalid_argument("unknown ingredient scope: " + std::string(name));
}

IngredientSelection selection_from_string(std::string_view name)
{
    if (name == "uniform") return IngredientSelection::Uniform;
    if (name == "similarity") return IngredientSelection::Similarity;
    if (name == "name-probability") return IngredientSelection::NameProbability;
    throw std::invalid_argument("unknown ingredient selection: " + std::string(name));
}

IngredientTransform transform_from_string(std::string_view name)
{
    if (name == "none") return IngredientTransform::None;
    if (name == "random-var") return IngredientTransform::RandomVar;
    if (name == "name-probability") return IngredientTransform::NameProbability;
    if (name == "name-cluster") return IngredientTransform::NameCluster;
    throw std::invalid_argument("unknown ingredient transform: " + std::string(name));
}

// ---------------------------------------------------------------------------
// pools

std::string IngredientPool::key_for(const SourceFile& file) const
{
    switch (scope_) {
    case IngredientScope::File: return file.path;
    case IngredientScope::Module: return file.module;
    case IngredientScope::Global: return "*";
    }
    return "*";
}

const std::vector<Ingredient>& IngredientPool::entries(const std::string& key) const
{
    static const std::vector<Ingredient> empty;
    auto it = by_key_.find(key);
    return it == by_key_.end() ? empty : it->second;
}

std::vector<std::string> IngredientPool::keys() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : by_key_) out.push_back(k);
    return out;
}

void IngredientPool::add(const std::string& key, Ingredient ingredient)
{
    if (seen_[key].insert(ingredient.printed).second) by_key_[key].push_back(std::move(ingredient));
}

namespace {

bool types_match(const Type& a, const Type& b) { return a.is_any() || b.is_any() || a == b; }

bool is_template_kind(NodeKind k)
{
    return k == NodeKind::Binary || k == NodeKind::Unary || k == NodeKind::Call || k == NodeKind::Index ||
           k == NodeKind::ArrayLit;
}

std::string type_tag(const Type& t)
{
    std::string tag;
    switch (t.base) {
    case Type::Base::Any: tag = "any"; break;
    case Type::Base::Void: tag = "void"; break;
    case Type::Base::Int: tag = "int"; break;
    case Type::Base::Float: tag = "float"; break;
    case Type::Base::Bool: tag = "bool"; break;
    case Type::Base::String: tag = "string"; break;
    }
    for (int i = 0; i < t.rank; ++i) tag += "_arr";
    return tag;
}

struct Abstractor {
    const Environment& env;
    std::map<std::string, std::string> names;
    std::map<std::string, int> per_type;
    std::vector<TypedName> placeholders;

    void run(Node& n)
    {
        if (n.kind == NodeKind::VarRef) {
            auto it = names.find(n.name);
            if (it == names.end()) {
                Type t = env.lookup(n.name).value_or(Type::any());
                std::string ph = placeholder_name(t, per_type[type_tag(t)]++);
                placeholders.emplace_back(ph, t);
                it = names.emplace(n.name, ph).first;
            }
            n.name = it->second;
            return;
        }
        for (auto& c : n.children) run(c);
    }
};

// Expressions of one statement, not descending into nested statements.
void statement_expressions(const Node& stmt, std::vector<const Node*>& out)
{
    for (const auto& c : stmt.children) {
        if (is_statement(c.kind)) continue;
        walk(c, [&](const Node& n) {
            out.push_back(&n);
            return true;
        });
    }
}

template <class F>
void for_each_statement(const Project& project, F&& f)
{
    for (std::size_t fi = 0; fi < project.files.size(); ++fi) {
        for (const auto& fn : project.files[fi].functions) {
            walk(fn.body, [&](const Node& n) {
                if (!is_statement(n.kind)) return false;
                if (n.kind != NodeKind::Block) f(fi, fn, n);
                return true;
            });
        }
    }
}

// Ingredients of each file, in program order (not deduplicated).
std::vector<std::vector<Ingredient>> collect(const Project& project, Granularity granularity)
{
    ProjectIndex index(project);
    TypeContext types(project);
    std::vector<std::vector<Ingredient>> per_file(project.files.size());
    for_each_statement(project, [&](std::size_t fi, const Function& fn, const Node& stmt) {
        const SourceFile& file = project.files[fi];
        Environment env = scope_at(index, types, stmt.id);
        if (granularity == Granularity::Statement) {
            Ingredient ing;
            ing.node = stmt;
            ing.source = stmt.id;
            ing.granularity = Granularity::Statement;
            ing.file = file.path;
            ing.module = file.module;
            ing.function = fn.name;
            for (const auto& name : free_variables(stmt)) ing.free.emplace_back(name, env.lookup(name).value_or(Type::any()));
            ing.type = Type::void_();
            ing.printed = print_statement(stmt);
            per_file[fi].push_back(std::move(ing));
            return;
        }
        std::vector<const Node*> exprs;
        statement_expressions(stmt, exprs);
        for (const Node* e : exprs) {
            if (!is_template_kind(e->kind)) continue;
            Ingredient ing;
            ing.node = *e;
            Abstractor abs{env, {}, {}, {}};
            abs.run(ing.node);
            ing.source = e->id;
            ing.granularity = Granularity::Expression;
            ing.file = file.path;
            ing.module = file.module;
            ing.function = fn.name;
            ing.free = abs.placeholders;
            Environment ph_env;
            for (const auto& [n, t] : ing.free) ph_env.bind(n, t);
            ing.type = types.infer(ing.node, ph_env);
            ing.printed = print_expression(ing.node);
            ing.is_template = true;
            per_file[fi].push_back(std::move(ing));
        }
    });
    return per_file;
}

}  // namespace

std::string placeholder_name(const Type& type, int index) { return "_" + type_tag(type) + "_" + std::to_string(index); }

IngredientPool build_pool(const Project& project, IngredientScope scope, Granularity granularity)
{
    if (granularity == Granularity::LogicalRelational)
        throw std::invalid_argument("no ingredient pool for logical-relational granularity");
    IngredientPool pool(scope, granularity);
    auto per_file = collect(project, granularity);
    for (std::size_t fi = 0; fi < project.files.size(); ++fi) {
        std::string key = pool.key_for(project.files[fi]);
        for (auto& ing : per_file[fi]) pool.add(key, std::move(ing));
    }
    return pool;
}

std::vector<Ingredient> mine_templates(const Project& project)
{
    IngredientPool pool = build_pool(project, IngredientScope::Global, Granularity::Expression);
    return pool.entries("*");
}

// ---------------------------------------------------------------------------
// models

namespace {

void count_names(const Node& node, NameFrequencyModel& model)
{
    walk(node, [&](const Node& n) {
        if (n.kind == NodeKind::VarRef || n.kind == NodeKind::VarDecl) model.add(n.name);
        return true;
    });
}

void count_file(const SourceFile& file, NameFrequencyModel& model)
{
    for (const auto& fn : file.functions) {
        for (const auto& p : fn.params) model.add(p.name);
        count_names(fn.body, model);
    }
}

}  // namespace

NameFrequencyModel::NameFrequencyModel(const Project& project)
{
    for (const auto& file : project.files) count_file(file, *this);
}

NameFrequencyModel NameFrequencyModel::of_file(const SourceFile& file)
{
    NameFrequencyModel model;
    count_file(file, model);
    return model;
}

std::size_t NameFrequencyModel::count(std::string_view name) const
{
    auto it = counts_.find(name);
    return it == counts_.end() ? 0 : it->second;
}

double NameFrequencyModel::probability(std::string_view name, const std::vector<std::string>& candidates) const
{
    double total = 0;
    for (const auto& c : candidates) total += static_cast<double>(count(c));
    return total > 0 ? static_cast<double>(count(name)) / total : 0.0;
}

std::map<std::string, double> token_counts(std::string_view code)
{
    std::map<std::string, double> out;
    std::size_t i = 0;
    while (i < code.size()) {
        unsigned char c = static_cast<unsigned char>(code[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalnum(c) || c == '_') {
            std::size_t j = i;
            while (j < code.size() && (std::isalnum(static_cast<unsigned char>(code[j])) || code[j] == '_')) ++j;
            out[std::string(code.substr(i, j - i))] += 1;
            i = j;
        } else {
            out[std::string(1, code[i])] += 1;
            ++i;
        }
    }
    return out;
}

double cosine(const std::map<std::string, double>& a, const std::map<std::string, double>& b)
{
    double dot = 0, na = 0, nb = 0;
    for (const auto& [k, v] : a) {
        na += v * v;
        auto it = b.find(k);
        if (it != b.end()) dot += v * it->second;
    }
    for (const auto& [k, v] : b) nb += v * v;
    if (na == 0 || nb == 0) return 0;
    return std::min(1.0, dot / (std::sqrt(na) * std::sqrt(nb)));
}

SimilarityModel::SimilarityModel(const Project& project)
{
    for (const auto& file : project.files)
        for (const auto& fn : file.functions) {
            // the function's own name says nothing about its body
            auto counts = token_counts(print_function(fn));
            if (--counts[fn.name] <= 0) counts.erase(fn.name);
            tokens_[fn.name] = std::move(counts);
        }
}

double SimilarityModel::similarity(std::string_view a, std::string_view b) const
{
    auto ia = tokens_.find(a);
    auto ib = tokens_.find(b);
    if (ia == tokens_.end() || ib == tokens_.end()) return 0;
    return cosine(ia->second, ib->second);
}

double name_similarity(std::string_view a, std::string_view b)
{
    if (a.empty() && b.empty()) return 1;
    std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return static_cast<double>(prev[b.size()]) / static_cast<double>(std::max(a.size(), b.size()));
}

// ---------------------------------------------------------------------------
// selection and transformation

const Ingredient* select_ingredient(const std::vector<const Ingredient*>& candidates, IngredientSelection strategy,
                                    const SelectionContext& ctx, Rng& rng)
{
    if (candidates.empty()) return nullptr;
    switch (strategy) {
    case IngredientSelection::Uniform: return candidates[rng.below(candidates.size())];
    case IngredientSelection::Similarity: {
        if (ctx.similarity == nullptr) return candidates[rng.below(candidates.size())];
        std::map<std::string, double> cache;
        auto sim = [&](const Ingredient* ing) {
            auto it = cache.find(ing->function);
            if (it == cache.end()) it = cache.emplace(ing->function, ctx.similarity->similarity(ctx.function, ing->function)).first;
            return it->second;
        };
        double best = -1;
        for (const Ingredient* ing : candidates) best = std::max(best, sim(ing));
        std::vector<const Ingredient*> top;
        for (const Ingredient* ing : candidates)
            if (sim(ing) == best) top.push_back(ing);
        return top[rng.below(top.size())];
    }
    case IngredientSelection::NameProbability: {
        std::vector<double> weights;
        for (const Ingredient* ing : candidates) {
            double w = 1;
            for (const auto& [name, type] : ing->free)
                w *= static_cast<double>(std::max<std::size_t>(1, ctx.names ? ctx.names->count(name) : 1));
            weights.push_back(w);
        }
        return candidates[rng.weighted(weights)];
    }
    }
    return nullptr;
}

Node rename_variables(const Node& node, const std::map<std::string, std::string>& renames)
{
    std::set<std::string> bound;
    walk(node, [&](const Node& n) {
        if (n.kind == NodeKind::VarDecl) bound.insert(n.name);
        return true;
    });
    Node out = node;
    std::function<void(Node&)> go = [&](Node& n) {
        if (n.kind == NodeKind::VarRef && !bound.count(n.name)) {
            auto it = renames.find(n.name);
            if (it != renames.end()) n.name = it->second;
        }
        for (auto& c : n.children) go(c);
    };
    go(out);
    return out;
}

namespace {

constexpr std::size_t kEnumerationCap = 4096;

std::size_t combination_count(const std::vector<std::vector<std::string>>& options)
{
    std::size_t total = 1;
    for (const auto& o : options) {
        if (o.empty()) return 0;
        if (total > kEnumerationCap * 16 / o.size() + 1) return kEnumerationCap * 16;
        total *= o.size();
    }
    return total;
}

std::vector<std::vector<std::string>> enumerate(const std::vector<std::vector<std::string>>& options)
{
    std::vector<std::vector<std::string>> out{{}};
    for (const auto& opts : options) {
        std::vector<std::vector<std::string>> next;
        for (const auto& prefix : out)
            for (const auto& o : opts) {
                next.push_back(prefix);
                next.back().push_back(o);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<Node> transform_ingredient(const Ingredient& ingredient, const Environment& env,
                                       IngredientTransform strategy, const NameFrequencyModel* names, Rng& rng,
                                       std::size_t limit)
{
    std::vector<std::string> targets;
    std::vector<std::vector<std::string>> options;
    auto visible = env.visible();
    for (const auto& [name, type] : ingredient.free) {
        auto have = env.lookup(name);
        if (have && types_match(type, *have)) continue;
        targets.push_back(name);
        std::vector<std::string> opts;
        for (const auto& [vname, vtype] : visible)
            if (types_match(type, vtype)) opts.push_back(vname);
        std::sort(opts.begin(), opts.end());
        options.push_back(std::move(opts));
    }
    if (targets.empty()) return {ingredient.node};
    if (strategy == IngredientTransform::None) return {};

    std::vector<std::vector<std::string>> combos;
    if (strategy == IngredientTransform::RandomVar) {
        std::size_t total = combination_count(options);
        if (total == 0) return {};
        if (total <= kEnumerationCap) {
            combos = enumerate(options);
            rng.shuffle(combos);
        } else {
            std::set<std::vector<std::string>> seen;
            for (std::size_t tries = 0; combos.size() < limit && tries < limit * 4; ++tries) {
                std::vector<std::string> c;
                for (const auto& o : options) c.push_back(o[rng.below(o.size())]);
                if (seen.insert(c).second) combos.push_back(std::move(c));
            }
        }
    } else {
        auto score = [&](std::size_t slot, const std::string& name) {
            if (strategy == IngredientTransform::NameCluster) return name_similarity(targets[slot], name);
            return static_cast<double>(names ? names->count(name) : 0);
        };
        for (std::size_t s = 0; s < options.size(); ++s) {
            if (options[s].empty()) return {};
            std::stable_sort(options[s].begin(), options[s].end(),
                             [&](const std::string& a, const std::string& b) { return score(s, a) > score(s, b); });
        }
        if (combination_count(options) > kEnumerationCap) {
            auto keep = static_cast<std::size_t>(
                std::max(1.0, std::floor(std::pow(double(kEnumerationCap), 1.0 / double(options.size())))));
            for (auto& o : options)
                if (o.size() > keep) o.resize(keep);
        }
        combos = enumerate(options);
        std::vector<double> scores;
        for (const auto& c : combos) {
            double v = strategy == IngredientTransform::NameCluster ? 0.0 : 1.0;
            for (std::size_t s = 0; s < c.size(); ++s) {
                if (strategy == IngredientTransform::NameCluster) v += score(s, c[s]);
                else v *= score(s, c[s]);
            }
            scores.push_back(v);
        }
        std::vector<std::size_t> order(combos.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (scores[a] != scores[b]) return scores[a] > scores[b];
            return combos[a] < combos[b];
        });
        std::vector<std::vector<std::string>> sorted;
        for (std::size_t i : order) sorted.push_back(std::move(combos[i]));
        combos = std::move(sorted);
    }
    if (combos.size() > limit) combos.resize(limit);

    std::vector<Node> out;
    for (const auto& c : combos) {
        std::map<std::string, std::string> renames;
        for (std::size_t s = 0; s < targets.size(); ++s) renames[targets[s]] = c[s];
        out.push_back(rename_variables(ingredient.node, renames));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string AttemptCache::key(NodeId point, std::string_view op, std::string_view form)
{
    std::string k = std::to_string(point);
    k += '\x1f';
    k += op;
    k += '\x1f';
    k += form;
    return k;
}

bool AttemptCache::contains(const std::string& key) const
{
    std::lock_guard lock(mutex_);
    return keys_.count(key) > 0;
}

bool AttemptCache::insert(const std::string& key)
{
    std::lock_guard lock(mutex_);
    return keys_.insert(key).second;
}

std::size_t AttemptCache::size() const
{
    std::lock_guard lock(mutex_);
    return keys_.size();
}

}  // namespace gvr
