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

#include "gvrepair/interpreter.hpp"
#include "gvrepair/types.hpp"
#include "support.hpp"

namespace gvr {
namespace {

using testing::parse_one;

TEST(Parser, MinimalProgram)
{
    Project p = parse_one("fn main() { return 1 + 2; }");
    ASSERT_EQ(p.files.size(), 1u);
    ASSERT_EQ(p.files[0].functions.size(), 1u);
    const Node& body = p.files[0].functions[0].body;
    ASSERT_EQ(body.children.size(), 1u);
    const Node& ret = body.children[0];
    EXPECT_EQ(ret.kind, NodeKind::Return);
    ASSERT_EQ(ret.children.size(), 1u);
    EXPECT_EQ(ret.children[0].kind, NodeKind::Binary);
    EXPECT_EQ(ret.children[0].binary_op(), BinaryOp::Add);
}

TEST(Parser, EmptyProjectIsAnError)
{
    try {
        parse_project({});
        FAIL() << "expected an error";
    } catch (const LangError& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyProject);
    }
}

TEST(Parser, DuplicateFunctionAcrossFiles)
{
    try {
        parse_project({{"a.mini", "fn f() { return 1; }"}, {"b.mini", "fn f() { return 2; }"}});
        FAIL() << "expected an error";
    } catch (const LangError& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateFunction);
    }
}

TEST(Parser, SyntaxErrorCarriesPosition)
{
    try {
        parse_one("fn f() {\n  return 1 +;\n}");
        FAIL() << "expected an error";
    } catch (const LangError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos) << e.what();
    }
}

TEST(Parser, IdsArePreorderFromOneAcrossSortedFiles)
{
    Project p = parse_project({{"z.mini", "fn b() { return 2; }"}, {"a.mini", "fn a() { let x = 1; return x; }"}});
    ASSERT_EQ(p.files[0].path, "a.mini");
    ProjectIndex index(p);
    const auto& order = index.preorder();
    ASSERT_FALSE(order.empty());
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], static_cast<NodeId>(i + 1));
    EXPECT_EQ(p.files[1].functions[0].body.children[0].kind, NodeKind::Return);
    EXPECT_GT(p.files[1].functions[0].body.id, p.files[0].functions[0].body.id);
}

TEST(Parser, ModulesFollowDirectories)
{
    EXPECT_EQ(module_of("main.mini"), ".");
    EXPECT_EQ(module_of("geo/shapes.mini"), "geo");
    EXPECT_EQ(module_of("a/b/c.mini"), "a/b");
}

TEST(Printer, BinaryExpression)
{
    EXPECT_EQ(print_expression(parse_expression("a<0")), "a < 0");
    EXPECT_EQ(print_expression(parse_expression("(a + b) * c")), "(a + b) * c");
    EXPECT_EQ(print_expression(parse_expression("a - (b - c)")), "a - (b - c)");
    EXPECT_EQ(print_expression(parse_expression("!(a && b)")), "!(a && b)");
}

TEST(Printer, CanonicalIfElse)
{
    Node s = parse_statement("if (x > 1) { y = 1; } else { y = 2; }");
    EXPECT_EQ(print_statement(s), "if (x > 1) {\n    y = 1;\n} else {\n    y = 2;\n}");
}

TEST(Printer, RoundTripOverCorpus)
{
    for (const auto& name : testing::corpus_names()) {
        auto loaded = testing::load_bug(name);
        std::vector<SourceText> again;
        for (const auto& f : loaded.project.files) {
            std::string text = print_file(f);
            auto reparsed = parse_project({{f.path, text}});
            EXPECT_EQ(print_file(reparsed.files[0]), text) << name << " " << f.path;
            again.push_back({f.path, text});
        }
        EXPECT_TRUE(structurally_equal(parse_project(again), loaded.project)) << name;
    }
}

TEST(Printer, CorpusSourcesAreCanonical)
{
    for (const auto& name : testing::corpus_names()) {
        auto loaded = testing::load_bug(name);
        for (const auto& f : loaded.project.files) {
            auto on_disk = testing::read_file(testing::corpus_dir() / name / "src" / f.path);
            EXPECT_EQ(print_file(f), on_disk) << name << "/" << f.path;
        }
    }
}

TEST(Types, CorpusTypeChecks)
{
    for (const auto& name : testing::corpus_names()) {
        auto loaded = testing::load_bug(name);
        auto err = check_project(loaded.project);
        EXPECT_FALSE(err.has_value()) << name << ": " << err.value_or("");
    }
}

TEST(Types, RejectsMismatches)
{
    EXPECT_TRUE(check_project(parse_one("fn f(x: int) -> int { return x + \"a\"; }")));
    EXPECT_TRUE(check_project(parse_one("fn f(x: bool) -> bool { return x < true; }")));
    EXPECT_TRUE(check_project(parse_one("fn f() -> int { return y; }")));
    EXPECT_FALSE(check_project(parse_one("fn f(s: string) -> bool { return s < \"b\"; }")));
    EXPECT_FALSE(check_project(parse_one("fn f(x: int) -> float { return to_float(x) / 2.0; }")));
}

TEST(Types, FreeVariablesExcludeLocals)
{
    Node s = parse_statement("if (a > b) { let t = a; b = t + c; }");
    auto free = free_variables(s);
    EXPECT_EQ(free, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Interpreter, ConstantReturnCoversTheReturn)
{
    Project p = parse_one("fn main() { return 2 + 3; }");
    auto trace = execute(p, "main", {});
    auto* normal = std::get_if<NormalOutcome>(&trace.outcome);
    ASSERT_NE(normal, nullptr);
    EXPECT_EQ(normal->value, Value(5));
    NodeId ret = p.files[0].functions[0].body.children[0].id;
    EXPECT_EQ(trace.covered, std::vector<NodeId>{ret});
}

TEST(Interpreter, InfiniteLoopTimesOut)
{
    Project p = parse_one("fn main() { while (true) {} }");
    auto trace = execute(p, "main", {}, 1000);
    EXPECT_TRUE(std::holds_alternative<TimeoutOutcome>(trace.outcome));
}

TEST(Interpreter, DivisionByZero)
{
    Project p = parse_one("fn main() { return 1 / 0; }");
    auto trace = execute(p, "main", {});
    auto* err = std::get_if<RuntimeErrorOutcome>(&trace.outcome);
    ASSERT_NE(err, nullptr);
    EXPECT_EQ(err->kind, "div-by-zero");
}

TEST(Interpreter, ArraysStringsAndBuiltins)
{
    Project p = parse_one(R"(
fn f(xs: [int], s: string) -> string {
    let ys = xs.append(4);
    ys[0] = abs(-7);
    let total = 0;
    let i = 0;
    while (i < ys.length()) {
        total = total + ys[i];
        i = i + 1;
    }
    return s.substr(1, 3) + str(total) + str(min(2, 9)) + str(to_int(2.9));
}
)");
    auto trace = execute(p, "f", {Value(Array{Value(1), Value(2)}), Value("hello")});
    auto* normal = std::get_if<NormalOutcome>(&trace.outcome);
    ASSERT_NE(normal, nullptr);
    EXPECT_EQ(normal->value, Value("el1322"));
}

TEST(Interpreter, ArgumentsAreValues)
{
    Project p = parse_one(R"(
fn g(xs: [int]) -> int {
    xs[0] = 9;
    return xs[0];
}

fn f() -> int {
    let a = [1, 2];
    let b = g(a);
    return a[0] * 10 + b;
}
)");
    auto trace = execute(p, "f", {});
    EXPECT_EQ(std::get<NormalOutcome>(trace.outcome).value, Value(19));
}

TEST(Interpreter, StepCountIsDeterministic)
{
    auto loaded = testing::load_bug("bisection-solver");
    const auto& t = loaded.suite[0];
    auto a = execute(loaded.project, t.entry, t.args);
    auto b = execute(loaded.project, t.entry, t.args);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.covered, b.covered);
    EXPECT_GT(a.steps, 40u);
}

TEST(Interpreter, RuntimeErrorsCanBeExpected)
{
    Project p = parse_one("fn f(xs: [int]) -> int { return xs[3]; }");
    auto suite = parse_test_suite(nlohmann::json::parse(
        R"([{"name": "oob", "entry": "f", "args": [[1]], "expect_error": "index-out-of-bounds"}])"));
    auto trace = execute(p, suite[0].entry, suite[0].args);
    EXPECT_TRUE(test_passes(suite[0], trace.outcome));
}

TEST(TestSuite, RejectsMalformedEntries)
{
    EXPECT_THROW(parse_test_suite(nlohmann::json::parse(R"([{"name": "a", "entry": "f", "args": []}])")),
                 std::invalid_argument);
    EXPECT_THROW(parse_test_suite(nlohmann::json::parse(
                     R"([{"name": "a", "entry": "f", "args": [], "expect": 1},
                         {"name": "a", "entry": "f", "args": [], "expect": 2}])")),
                 std::invalid_argument);
    EXPECT_THROW(parse_test_suite(nlohmann::json::parse(R"({"name": "a"})")), std::invalid_argument);
}

TEST(Values, FloatComparisonIsRelative)
{
    EXPECT_TRUE(values_match(Value(3.0), Value(3.0000000000001)));
    EXPECT_FALSE(values_match(Value(3.0), Value(3.001)));
    EXPECT_TRUE(values_match(Value(3), Value(3.0)));
    EXPECT_FALSE(values_match(Value(3), Value(4)));
    EXPECT_FALSE(Value(3) == Value(3.0));
}

}  // namespace
}  // namespace gvr
