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

#include <random>
#include <set>

#include "gvrepair/ingredients.hpp"
#include "gvrepair/types.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace gvr {
namespace {

using testing::parse_one;

std::set<std::string> printed_entries(const std::vector<Ingredient>& v)
{
    std::set<std::string> out;
    for (const auto& i : v) out.insert(i.printed);
    return out;
}

TEST(Pool, SingleFileScopeHoldsEveryStatement)
{
    auto bug = testing::load_bug("count-equal");
    auto pool = build_pool(bug.project, IngredientScope::File, Granularity::Statement);
    const auto& file = bug.project.files[0];
    auto entries = pool.entries(pool.key_for(file));
    EXPECT_EQ(printed_entries(entries), oracle::printed_statements(bug.project, {file.path}));
    EXPECT_EQ(entries.size(), printed_entries(entries).size());
}

TEST(Pool, ScopesNestOverCorpus)
{
    for (const auto& name : testing::corpus_names()) {
        auto bug = testing::load_bug(name);
        auto file_pool = build_pool(bug.project, IngredientScope::File, Granularity::Statement);
        auto module_pool = build_pool(bug.project, IngredientScope::Module, Granularity::Statement);
        auto global_pool = build_pool(bug.project, IngredientScope::Global, Granularity::Statement);
        auto global = printed_entries(global_pool.entries(global_pool.key_for(bug.project.files[0])));
        std::set<std::string> all_paths;
        for (const auto& f : bug.project.files) all_paths.insert(f.path);
        EXPECT_EQ(global, oracle::printed_statements(bug.project, all_paths)) << name;
        for (const auto& f : bug.project.files) {
            auto in_file = printed_entries(file_pool.entries(file_pool.key_for(f)));
            auto in_module = printed_entries(module_pool.entries(module_pool.key_for(f)));
            EXPECT_EQ(in_file, oracle::printed_statements(bug.project, {f.path})) << name;
            EXPECT_TRUE(std::includes(in_module.begin(), in_module.end(), in_file.begin(), in_file.end())) << name;
            EXPECT_TRUE(std::includes(global.begin(), global.end(), in_module.begin(), in_module.end())) << name;
        }
    }
}

TEST(Pool, TwoModulesHandCount)
{
    auto bug = testing::load_bug("two-modules");
    auto pool = build_pool(bug.project, IngredientScope::Module, Granularity::Statement);
    EXPECT_EQ(pool.entries("geo").size(), 17u);
    EXPECT_EQ(oracle::printed_statements(bug.project, {"geo/area.mini", "geo/shapes.mini"}).size(), 17u);
}

TEST(Pool, ScopeKeys)
{
    Project p = parse_project({{"a/x.mini", "fn f() -> int { return 1; }"}, {"b.mini", "fn g() -> int { return 2; }"}});
    EXPECT_EQ(IngredientPool(IngredientScope::File, Granularity::Statement).key_for(p.files[0]), "a/x.mini");
    EXPECT_EQ(IngredientPool(IngredientScope::Module, Granularity::Statement).key_for(p.files[0]), "a");
    EXPECT_EQ(IngredientPool(IngredientScope::Module, Granularity::Statement).key_for(p.files[1]), ".");
    EXPECT_EQ(scope_from_string("package"), IngredientScope::Module);
    EXPECT_THROW(scope_from_string("class"), std::invalid_argument);
}

TEST(Templates, VariablesBecomeTypedPlaceholders)
{
    Project p = parse_one("fn f(a: int, b: int, s: string) -> int { return a + b + s.length(); }");
    auto templates = mine_templates(p);
    auto printed = printed_entries(templates);
    EXPECT_TRUE(printed.count("_int_0 + _int_1")) << *printed.begin();
    EXPECT_TRUE(printed.count("_string_0.length()"));
    EXPECT_TRUE(printed.count("_int_0 + _int_1 + _string_0.length()"));
    for (const auto& t : templates) EXPECT_TRUE(t.is_template);
    EXPECT_EQ(placeholder_name(Type::float_(), 2), "_float_2");
}

TEST(Templates, InstantiatesWithTheOnlyStringInScope)
{
    auto bug = testing::load_bug("fraction-tail");
    auto templates = mine_templates(bug.project);
    const Ingredient* length = nullptr;
    for (const auto& t : templates)
        if (t.printed == "_string_0.length()") length = &t;
    ASSERT_NE(length, nullptr);
    OperatorContext ctx(bug.project);
    NodeId point = testing::find_printed(bug.project, "start_index + n");
    Environment env = scope_at(ctx.index, ctx.types, point);
    NameFrequencyModel names(bug.project);
    Rng rng(1);
    auto out = transform_ingredient(*length, env, IngredientTransform::NameProbability, &names, rng);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(print_expression(out[0]), "source.length()");
}

TEST(Selection, SingleEntryThenExhausted)
{
    Ingredient only;
    only.printed = "x = 1;";
    Rng rng(3);
    for (auto s : {IngredientSelection::Uniform, IngredientSelection::Similarity, IngredientSelection::NameProbability}) {
        EXPECT_EQ(select_ingredient({&only}, s, {}, rng), &only);
        EXPECT_EQ(select_ingredient({}, s, {}, rng), nullptr);
    }
}

TEST(Selection, UniformPassesChiSquare)
{
    std::vector<Ingredient> four(4);
    std::vector<const Ingredient*> ptrs;
    for (auto& i : four) ptrs.push_back(&i);
    Rng rng(2024, Stream::Ingredients);
    std::vector<std::size_t> counts(4);
    for (int k = 0; k < 10000; ++k) counts[select_ingredient(ptrs, IngredientSelection::Uniform, {}, rng) - &four[0]]++;
    double chi = oracle::chi_square(counts, {0.25, 0.25, 0.25, 0.25});
    EXPECT_LT(chi, oracle::chi_square_critical_1pct(3)) << counts[0] << " " << counts[1];
}

TEST(Selection, IdenticalDonorRanksFirstUnderSimilarity)
{
    Project p = parse_one(R"(
fn buggy(a: int, b: int) -> int {
    let t = a * b;
    return t + a;
}

fn twin(a: int, b: int) -> int {
    let t = a * b;
    return t + a;
}

fn other(s: string) -> string {
    return s + "!";
}
)");
    SimilarityModel sim(p);
    EXPECT_NEAR(sim.similarity("buggy", "twin"), 1.0, 1e-12);
    EXPECT_LT(sim.similarity("buggy", "other"), 0.5);
    std::vector<Ingredient> donors(4);
    donors[0].function = donors[2].function = "other";
    donors[1].function = donors[3].function = "twin";
    std::vector<const Ingredient*> cands;
    for (const auto& i : donors) cands.push_back(&i);
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
        auto* pick = select_ingredient(cands, IngredientSelection::Similarity, {"buggy", &sim, nullptr}, rng);
        ASSERT_NE(pick, nullptr);
        EXPECT_EQ(pick->function, "twin");
    }
}

TEST(Selection, NameSimilarityIsLcsRatio)
{
    EXPECT_DOUBLE_EQ(name_similarity("count", "count"), 1.0);
    EXPECT_DOUBLE_EQ(name_similarity("abc", "xyz"), 0.0);
    EXPECT_DOUBLE_EQ(name_similarity("items", "qty"), 1.0 / 5.0);
    EXPECT_DOUBLE_EQ(name_similarity("den", "count"), 1.0 / 5.0);
}

Ingredient statement_ingredient(const std::string& text, std::vector<TypedName> free)
{
    Ingredient ing;
    ing.node = parse_statement(text);
    ing.printed = print_statement(ing.node);
    ing.free = std::move(free);
    ing.type = Type::void_();
    return ing;
}

Environment ints(std::initializer_list<const char*> names)
{
    Environment env;
    for (const char* n : names) env.bind(n, Type::int_());
    return env;
}

TEST(Transform, NoFreeVariablesIsUnchanged)
{
    auto ing = statement_ingredient("return 0;", {});
    NameFrequencyModel names;
    for (auto s : {IngredientTransform::None, IngredientTransform::RandomVar, IngredientTransform::NameProbability,
                   IngredientTransform::NameCluster}) {
        Rng rng(1);
        auto out = transform_ingredient(ing, ints({"a"}), s, &names, rng);
        ASSERT_EQ(out.size(), 1u);
        EXPECT_TRUE(structurally_equal(out[0], ing.node));
    }
}

TEST(Transform, NoneDiscardsOutOfScopeIngredient)
{
    auto ing = statement_ingredient("y = z + 1;", {{"y", Type::int_()}, {"z", Type::int_()}});
    Rng rng(1);
    EXPECT_TRUE(transform_ingredient(ing, ints({"a", "b"}), IngredientTransform::None, nullptr, rng).empty());
    auto in_scope = transform_ingredient(ing, ints({"y", "z"}), IngredientTransform::None, nullptr, rng);
    ASSERT_EQ(in_scope.size(), 1u);
}

// Replays the seeded shuffle with the standard 64-bit Mersenne Twister:
// the four (y, z) assignments over {a, b} in lexicographic order are
// Fisher-Yates shuffled with rejection-sampled draws.
TEST(Transform, RandomVarSeedSevenReplay)
{
    auto ing = statement_ingredient("y = z + 1;", {{"y", Type::int_()}, {"z", Type::int_()}});
    Rng rng(7);
    auto out = transform_ingredient(ing, ints({"a", "b"}), IngredientTransform::RandomVar, nullptr, rng);
    ASSERT_EQ(out.size(), 4u);

    std::vector<std::string> combos = {"a = a + 1;", "a = b + 1;", "b = a + 1;", "b = b + 1;"};
    std::mt19937_64 mt(7);
    auto below = [&](std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
        std::uint64_t x;
        do x = mt();
        while (x >= limit);
        return x % n;
    };
    for (std::size_t i = combos.size(); i > 1; --i) std::swap(combos[i - 1], combos[below(i)]);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(print_statement(out[i]), combos[i]);
    EXPECT_EQ(print_statement(out[0]), "a = b + 1;");
}

TEST(Transform, FrequencyRanksNames)
{
    Project p = parse_one(R"(
fn f(hot: int, cold: int) -> int {
    let t = hot + hot + hot + hot;
    return t + cold;
}
)");
    NameFrequencyModel names(p);
    EXPECT_EQ(names.count("hot"), 5u);
    EXPECT_EQ(names.count("cold"), 2u);
    auto ing = statement_ingredient("q = q + 1;", {{"q", Type::int_()}});
    Rng rng(1);
    auto out = transform_ingredient(ing, ints({"cold", "hot"}), IngredientTransform::NameProbability, &names, rng);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(print_statement(out[0]), "hot = hot + 1;");
    EXPECT_EQ(print_statement(out[1]), "cold = cold + 1;");
}

TEST(Transform, NameClusterPrefersSimilarNames)
{
    auto ing = statement_ingredient("if (count == 0) {\n    return 0;\n}", {{"count", Type::int_()}});
    Rng rng(1);
    auto out = transform_ingredient(ing, ints({"amount", "num", "den"}), IngredientTransform::NameCluster, nullptr, rng);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(print_statement(out[0]), "if (amount == 0) {\n    return 0;\n}");
}

TEST(Transform, ResultsStayInScopeOverCorpus)
{
    for (const auto& name : testing::corpus_names()) {
        auto bug = testing::load_bug(name);
        OperatorContext ctx(bug.project);
        auto pool = build_pool(bug.project, IngredientScope::Global, Granularity::Statement);
        auto templates = mine_templates(bug.project);
        NameFrequencyModel names(bug.project);
        std::size_t checked = 0;
        std::size_t n = 0;
        for (NodeId id : ctx.index.preorder()) {
            if (++n % 7 != 0) continue;
            Environment env = scope_at(ctx.index, ctx.types, id);
            Rng rng(id);
            for (const std::vector<Ingredient>* v : {&pool.entries("*"), static_cast<const std::vector<Ingredient>*>(&templates)}) {
                for (const auto& ing : *v) {
                    for (auto s : {IngredientTransform::RandomVar, IngredientTransform::NameProbability}) {
                        for (const auto& out : transform_ingredient(ing, env, s, &names, rng, 8)) {
                            for (const auto& fv : free_variables(out)) EXPECT_TRUE(env.lookup(fv)) << name << " " << fv;
                            ++checked;
                        }
                    }
                }
            }
        }
        EXPECT_GT(checked, 0u) << name;
    }
}

TEST(AttemptCacheTest, InsertsOnce)
{
    AttemptCache cache;
    auto k = AttemptCache::key(4, "replace", "return 0;");
    EXPECT_TRUE(cache.insert(k));
    EXPECT_FALSE(cache.insert(k));
    EXPECT_TRUE(cache.contains(k));
    EXPECT_NE(k, AttemptCache::key(4, "insert-before", "return 0;"));
    EXPECT_EQ(cache.size(), 1u);
}

}  // namespace
}  // namespace gvr
