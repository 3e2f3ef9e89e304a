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

#include <cmath>

#include "gvrepair/fault_localization.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace gvr {
namespace {

const char* kSmall = R"(
fn f(x: int) -> int {
    let y = x;
    if (y > 3) {
        y = y - 1;
    }
    y = y + 1;
    return y;
}
)";

TEST(Spectrum, AllPassingSuiteHasNoFailingTests)
{
    Project p = testing::parse_one(kSmall);
    auto suite = parse_test_suite(nlohmann::json::parse(R"([
        {"name": "a", "entry": "f", "args": [1], "expect": 2},
        {"name": "b", "entry": "f", "args": [2], "expect": 3},
        {"name": "c", "entry": "f", "args": [5], "expect": 5}])"));
    auto m = run_suite(p, suite, kDefaultStepBudget);
    EXPECT_EQ(m.failing, 0);
    EXPECT_EQ(m.passing, 3);
    EXPECT_THROW(suspiciousness(m, Formula::Ochiai), NoFailingTests);
}

TEST(Spectrum, CountersFollowCoverage)
{
    Project p = testing::parse_one(kSmall);
    auto ids = statement_ids(p);
    ASSERT_EQ(ids.size(), 5u);
    NodeId a = ids[1], b = ids[3];
    auto m = build_matrix(p, {"t1", "t2"}, {{a, b}, {ids[0]}}, {Verdict::Fail, Verdict::Pass});
    for (const auto& c : m.counters) {
        bool hit = c.statement == a || c.statement == b;
        EXPECT_EQ(c.ef, hit ? 1 : 0) << c.statement;
        EXPECT_EQ(c.nf, hit ? 0 : 1) << c.statement;
        EXPECT_EQ(c.ep, c.statement == ids[0] ? 1 : 0) << c.statement;
    }
}

// Coverage of the abs-sign bug worked out by reading its source:
//   2 let r = x;   4 if (x > 0)   9 r = -x;   13 return r;
// x = -3 fails, 4 fails (and reaches 9), 0 passes, -250 fails.
TEST(Spectrum, AbsSignMatchesHandBuiltMatrix)
{
    auto bug = testing::load_bug("abs-sign");
    auto m = run_suite(bug.project, bug.suite, kDefaultStepBudget);
    std::vector<std::vector<NodeId>> coverage = {{2, 4, 13}, {2, 4, 9, 13}, {2, 4, 13}, {2, 4, 13}};
    std::vector<Verdict> verdicts = {Verdict::Fail, Verdict::Fail, Verdict::Pass, Verdict::Fail};
    EXPECT_EQ(m.tests, (std::vector<std::string>{"negative", "positive", "zero", "large_negative"}));
    EXPECT_EQ(m.coverage, coverage);
    EXPECT_EQ(m.verdicts, verdicts);
    struct Row {
        NodeId id;
        int ef, ep, nf, np;
    };
    const Row expected[] = {{2, 3, 1, 0, 0}, {4, 3, 1, 0, 0}, {9, 1, 0, 2, 1}, {13, 3, 1, 0, 0}};
    ASSERT_EQ(m.counters.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(m.counters[i].statement, expected[i].id);
        EXPECT_EQ(m.counters[i].ef, expected[i].ef);
        EXPECT_EQ(m.counters[i].ep, expected[i].ep);
        EXPECT_EQ(m.counters[i].nf, expected[i].nf);
        EXPECT_EQ(m.counters[i].np, expected[i].np);
    }
}

TEST(Formulas, ClosedForms)
{
    EXPECT_NEAR(ochiai(2, 0, 1), 0.816496580927726, 1e-12);
    EXPECT_DOUBLE_EQ(ochiai(3, 0, 0), 1.0);
    EXPECT_DOUBLE_EQ(tarantula(3, 0, 3, 5), 1.0);
    EXPECT_DOUBLE_EQ(tarantula(0, 2, 3, 5), 0.0);
    EXPECT_DOUBLE_EQ(ochiai(0, 3, 4), 0.0);
    EXPECT_NEAR(tarantula(1, 1, 2, 4), 0.5 / 0.75, 1e-15);
    EXPECT_DOUBLE_EQ(tarantula(2, 0, 2, 0), 1.0);
}

TEST(Formulas, RankingIsDescendingWithIdTies)
{
    auto bug = testing::load_bug("abs-sign");
    auto m = run_suite(bug.project, bug.suite, kDefaultStepBudget);
    auto ranked = suspiciousness(m, Formula::Ochiai);
    ASSERT_EQ(ranked.size(), 4u);
    EXPECT_EQ(ranked[0].statement, 2);
    EXPECT_EQ(ranked[1].statement, 4);
    EXPECT_EQ(ranked[2].statement, 13);
    EXPECT_EQ(ranked[3].statement, 9);
    EXPECT_NEAR(ranked[0].suspiciousness, 3.0 / std::sqrt(12.0), 1e-12);
    EXPECT_NEAR(ranked[3].suspiciousness, 1.0 / std::sqrt(3.0), 1e-12);
    auto top = filter_suspicious(ranked, 2);
    ASSERT_EQ(top.size(), 2u);
    EXPECT_EQ(top[1].statement, 4);
}

TEST(Formulas, FilterDropsZeroScores)
{
    std::vector<SuspiciousLocation> v = {{5, 0.7}, {3, 0.2}, {8, 0.0}, {1, 0.0}};
    auto kept = filter_suspicious(v, 100);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[1].statement, 3);
}

TEST(Formulas, MatchNaiveRecomputationOnCorpus)
{
    for (const auto& name : testing::corpus_names()) {
        auto bug = testing::load_bug(name);
        auto traces = oracle::raw_traces(bug.project, bug.suite);
        auto naive = oracle::naive_scores(bug.project, traces);
        auto m = run_suite(bug.project, bug.suite, kDefaultStepBudget);
        for (Formula f : {Formula::Ochiai, Formula::Tarantula}) {
            auto ranked = suspiciousness(m, f);
            std::size_t covered = 0;
            for (const auto& [id, s] : naive)
                if (s.ef + s.ep > 0) ++covered;
            EXPECT_EQ(ranked.size(), covered) << name;
            for (const auto& loc : ranked) {
                const auto& s = naive.at(loc.statement);
                double want = f == Formula::Ochiai ? s.ochiai : s.tarantula;
                EXPECT_NEAR(loc.suspiciousness, want, 1e-12) << name << " @" << loc.statement;
                EXPECT_GE(loc.suspiciousness, 0.0);
                EXPECT_LE(loc.suspiciousness, 1.0);
            }
        }
    }
}

TEST(Spectrum, ParallelRunMatchesSerial)
{
    auto bug = testing::load_bug("word-count");
    auto a = run_suite(bug.project, bug.suite, kDefaultStepBudget, 1);
    auto b = run_suite(bug.project, bug.suite, kDefaultStepBudget, 4);
    EXPECT_EQ(a.coverage, b.coverage);
    EXPECT_EQ(a.verdicts, b.verdicts);
}

}  // namespace
}  // namespace gvr
