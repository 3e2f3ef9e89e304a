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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/test_suite.hpp"

namespace gvr {

enum class Verdict : std::uint8_t { Pass, Fail };

/// Spectrum counters of one statement: failing/passing tests that do (ef, ep)
/// or do not (nf, np) execute it.
struct StatementCounters {
    NodeId statement = 0;
    int ef = 0;
    int ep = 0;
    int nf = 0;
    int np = 0;
};

struct SpectrumMatrix {
    std::vector<std::string> tests;
    std::vector<std::vector<NodeId>> coverage;  // per test, sorted statement ids
    std::vector<Verdict> verdicts;              // per test
    int failing = 0;
    int passing = 0;
    std::vector<StatementCounters> counters;  // every statement, ascending id

    const StatementCounters* find(NodeId statement) const;
};

/// Ids of every coverage-bearing statement (all statements except blocks).
std::vector<NodeId> statement_ids(const Project& project);

/// Builds the matrix from raw per-test coverage and verdicts.
SpectrumMatrix build_matrix(const Project& project, std::vector<std::string> tests,
                            std::vector<std::vector<NodeId>> coverage, std::vector<Verdict> verdicts);

/// Runs every test under the tracing interpreter. Tests may run on `jobs`
/// threads; the matrix is independent of execution order.
SpectrumMatrix run_suite(const Project& project, const TestSuite& suite, std::uint64_t step_budget,
                         unsigned jobs = 1);

enum class Formula { Ochiai, Tarantula };

struct SuspiciousLocation {
    NodeId statement = 0;
    double suspiciousness = 0.0;
};

class NoFailingTests : public std::runtime_error {
public:
    NoFailingTests() : std::runtime_error("nothing to repair: the test suite has no failing test") {}
};

double ochiai(int ef, int nf, int ep);
/// `failing`/`passing` are suite totals; a zero `passing` makes the passing
/// ratio 0.
double tarantula(int ef, int ep, int failing, int passing);

/// Suspiciousness of every statement executed by at least one test, sorted
/// by descending value then ascending id. Throws NoFailingTests.
std::vector<SuspiciousLocation> suspiciousness(const SpectrumMatrix& matrix, Formula formula);

/// Drops zero-valued locations and keeps at most `max_suspicious` entries.
std::vector<SuspiciousLocation> filter_suspicious(std::vector<SuspiciousLocation> ranked, std::size_t max_suspicious);

}  // namespace gvr
