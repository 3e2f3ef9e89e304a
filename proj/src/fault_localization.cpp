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

#include "gvrepair/fault_localization.hpp"

#include <algorithm>
#include <cmath>

#include "gvrepair/parallel.hpp"

namespace gvr {

const StatementCounters* SpectrumMatrix::find(NodeId statement) const
{
    auto it = std::lower_bound(counters.begin(), counters.end(), statement,
                               [](const StatementCounters& c, NodeId id) { return c.statement < id; });
    return it != counters.end() && it->statement == statement ? &*it : nullptr;
}

std::vector<NodeId> statement_ids(const Project& project)
{
    std::vector<NodeId> ids;
    for (const auto& file : project.files) {
        for (const auto& fn : file.functions) {
            walk(fn.body, [&](const Node& n) {
                if (is_statement(n.kind) && n.kind != NodeKind::Block) {
                    ids.push_back(n.id);
                }
                return is_statement(n.kind);
            });
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

SpectrumMatrix build_matrix(const Project& project, std::vector<std::string> tests,
                            std::vector<std::vector<NodeId>> coverage, std::vector<Verdict> verdicts)
{
    SpectrumMatrix m;
    m.tests = std::move(tests);
    m.coverage = std::move(coverage);
    m.verdicts = std::move(verdicts);
    for (auto v : m.verdicts) {
        (v == Verdict::Fail ? m.failing : m.passing) += 1;
    }
    for (NodeId id : statement_ids(project)) {
        m.counters.push_back(StatementCounters{id, 0, 0, 0, 0});
    }
    for (std::size_t t = 0; t < m.coverage.size(); ++t) {
        bool fail = m.verdicts[t] == Verdict::Fail;
        for (NodeId id : m.coverage[t]) {
            auto it = std::lower_bound(m.counters.begin(), m.counters.end(), id,
                                       [](const StatementCounters& c, NodeId x) { return c.statement < x; });
            if (it != m.counters.end() && it->statement == id) {
                (fail ? it->ef : it->ep) += 1;
            }
        }
    }
    for (auto& c : m.counters) {
        c.nf = m.failing - c.ef;
        c.np = m.passing - c.ep;
    }
    return m;
}

SpectrumMatrix run_suite(const Project& project, const TestSuite& suite, std::uint64_t step_budget, unsigned jobs)
{
    if (suite.empty()) {
        throw std::invalid_argument("test suite is empty");
    }
    Interpreter interp(project);
    std::vector<std::string> names(suite.size());
    std::vector<std::vector<NodeId>> coverage(suite.size());
    std::vector<Verdict> verdicts(suite.size());
    parallel_for(suite.size(), jobs, [&](std::size_t i) {
        ExecutionTrace trace = interp.run(suite[i].entry, suite[i].args, step_budget);
        names[i] = suite[i].name;
        verdicts[i] = test_passes(suite[i], trace.outcome) ? Verdict::Pass : Verdict::Fail;
        coverage[i] = std::move(trace.covered);
    });
    return build_matrix(project, std::move(names), std::move(coverage), std::move(verdicts));
}

double ochiai(int ef, int nf, int ep)
{
    double denom = std::sqrt(static_cast<double>(ef + nf) * static_cast<double>(ef + ep));
    return denom == 0.0 ? 0.0 : static_cast<double>(ef) / denom;
}

double tarantula(int ef, int ep, int failing, int passing)
{
    double fail_ratio = failing == 0 ? 0.0 : static_cast<double>(ef) / failing;
    double pass_ratio = passing == 0 ? 0.0 : static_cast<double>(ep) / passing;
    double denom = fail_ratio + pass_ratio;
    return denom == 0.0 ? 0.0 : fail_ratio / denom;
}

std::vector<SuspiciousLocation> suspiciousness(const SpectrumMatrix& matrix, Formula formula)
{
    if (matrix.failing == 0) {
        throw NoFailingTests();
    }
    std::vector<SuspiciousLocation> out;
    for (const auto& c : matrix.counters) {
        if (c.ef == 0 && c.ep == 0) {
            continue;
        }
        double s = formula == Formula::Ochiai ? ochiai(c.ef, c.nf, c.ep)
                                              : tarantula(c.ef, c.ep, matrix.failing, matrix.passing);
        out.push_back(SuspiciousLocation{c.statement, s});
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.suspiciousness != b.suspiciousness) {
            return a.suspiciousness > b.suspiciousness;
        }
        return a.statement < b.statement;
    });
    return out;
}

std::vector<SuspiciousLocation> filter_suspicious(std::vector<SuspiciousLocation> ranked, std::size_t max_suspicious)
{
    std::erase_if(ranked, [](const SuspiciousLocation& s) { return s.suspiciousness <= 0.0; });
    if (ranked.size() > max_suspicious) {
        ranked.resize(max_suspicious);
    }
    return ranked;
}

}  // namespace gvr
