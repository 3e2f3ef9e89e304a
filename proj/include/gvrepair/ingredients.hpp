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

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/operators.hpp"
#include "gvrepair/rng.hpp"
#include "gvrepair/types.hpp"

namespace gvr {

enum class IngredientScope { File, Module, Global };
enum class IngredientSelection { Uniform, Similarity, NameProbability };
enum class IngredientTransform { None, RandomVar, NameProbability, NameCluster };

std::string_view to_string(IngredientScope s);
std::string_view to_string(IngredientSelection s);
std::string_view to_string(IngredientTransform t);
IngredientScope scope_from_string(std::string_view name);
IngredientSelection selection_from_string(std::string_view name);
IngredientTransform transform_from_string(std::string_view name);

using TypedName = std::pair<std::string, Type>;

/// A code fragment that can be reused elsewhere. Templates are expression
/// ingredients whose variables were abstracted to typed placeholders, so
/// their free variables are exactly the placeholders.
struct Ingredient {
    Node node;
    NodeId source = 0;
    Granularity granularity = Granularity::Statement;
    std::string file;
    std::string module;
    std::string function;
    std::vector<TypedName> free;
    Type type;  // static type for expressions, void for statements
    std::string printed;
    bool is_template = false;
};

class IngredientPool {
public:
    IngredientPool(IngredientScope scope, Granularity granularity) : scope_(scope), granularity_(granularity) {}

    IngredientScope scope() const { return scope_; }
    Granularity granularity() const { return granularity_; }

    /// Pool key of a file under this pool's scope rule.
    std::string key_for(const SourceFile& file) const;
    /// Entries visible from `key`, in first-occurrence order.
    const std::vector<Ingredient>& entries(const std::string& key) const;
    std::vector<std::string> keys() const;

    void add(const std::string& key, Ingredient ingredient);

private:
    IngredientScope scope_;
    Granularity granularity_;
    std::map<std::string, std::vector<Ingredient>> by_key_;
    std::map<std::string, std::set<std::string>> seen_;
};

/// Statement granularity pools hold every non-block statement; expression
/// granularity pools hold mined templates. Both are deduplicated by printed form.
IngredientPool build_pool(const Project& project, IngredientScope scope, Granularity granularity);

/// Every template of the project, deduplicated, in program order.
std::vector<Ingredient> mine_templates(const Project& project);

/// Placeholder identifier for the `index`-th variable of `type` in a template.
std::string placeholder_name(const Type& type, int index);

/// Variable-name occurrence counts (references and declarations).
class NameFrequencyModel {
public:
    NameFrequencyModel() = default;
    explicit NameFrequencyModel(const Project& project);
    static NameFrequencyModel of_file(const SourceFile& file);

    std::size_t count(std::string_view name) const;
    /// count(name) normalized over `candidates`.
    double probability(std::string_view name, const std::vector<std::string>& candidates) const;
    void add(const std::string& name, std::size_t n = 1) { counts_[name] += n; }

private:
    std::map<std::string, std::size_t, std::less<>> counts_;
};

/// Token-multiset model of every function, for code-similarity selection.
class SimilarityModel {
public:
    SimilarityModel() = default;
    explicit SimilarityModel(const Project& project);

    /// Cosine similarity of the token multisets of two functions, in [0, 1].
    double similarity(std::string_view a, std::string_view b) const;

private:
    std::map<std::string, std::map<std::string, double>, std::less<>> tokens_;
};

std::map<std::string, double> token_counts(std::string_view code);
double cosine(const std::map<std::string, double>& a, const std::map<std::string, double>& b);

/// Length of the longest common subsequence over max length; 1 for equal names.
double name_similarity(std::string_view a, std::string_view b);

struct SelectionContext {
    std::string function;  // function enclosing the modification point
    const SimilarityModel* similarity = nullptr;
    const NameFrequencyModel* names = nullptr;
};

/// Picks one of `candidates` (all untried). Returns nullptr when empty.
///   uniform: equal probability.
///   similarity: uniform among entries whose donor function is most similar
///     to the point's function.
///   name-probability: weight = product of the free-variable name counts.
const Ingredient* select_ingredient(const std::vector<const Ingredient*>& candidates, IngredientSelection strategy,
                                    const SelectionContext& ctx, Rng& rng);

/// Concrete instantiations of an ingredient at a point whose visible
/// variables are `env`. A free variable is out of scope if no visible
/// variable of that name has a matching type.
///   none: [ingredient] if nothing is out of scope, otherwise [].
///   random-var: out-of-scope variables replaced by same-typed visible ones,
///     every combination in a seeded random order.
///   name-probability: combinations by descending product of name counts,
///     ties by the names in lexicographic order.
///   name-cluster: combinations by descending name similarity to the
///     replaced names, ties lexicographic.
/// At most `limit` results.
std::vector<Node> transform_ingredient(const Ingredient& ingredient, const Environment& env,
                                       IngredientTransform strategy, const NameFrequencyModel* names, Rng& rng,
                                       std::size_t limit = 256);

/// Renames free variable references according to `renames`.
Node rename_variables(const Node& node, const std::map<std::string, std::string>& renames);

/// Thread-safe set of attempted (point, operator, form) keys.
class AttemptCache {
public:
    static std::string key(NodeId point, std::string_view op, std::string_view form);

    bool contains(const std::string& key) const;
    /// Inserts and returns true if the key was not present.
    bool insert(const std::string& key);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::set<std::string> keys_;
};

}  // namespace gvr
