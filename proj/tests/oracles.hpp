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


// Independent reference computations used as test oracles. They re-derive
// results from first principles (raw traces, direct AST walks) instead of
// calling the code under test.

#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gvrepair/ast.hpp"
#include "gvrepair/interpreter.hpp"
#include "gvrepair/printer.hpp"
#include "gvrepair/test_suite.hpp"
#include "gvrepair/types.hpp"

namespace gvr::oracle {

struct RawTrace {
    std::set<NodeId> covered;
    bool passed = false;
};

inline std::vector<RawTrace> raw_traces(const Project& project, const TestSuite& suite,
                                        std::uint64_t budget = kDefaultStepBudget)
{
    std::vector<RawTrace> out;
    for (const auto& test : suite) {
        auto trace = execute(project, test.entry, test.args, budget);
        out.push_back({{trace.covered.begin(), trace.covered.end()}, test_passes(test, trace.outcome)});
    }
    return out;
}

inline std::vector<NodeId> all_statements(const Project& project)
{
    std::vector<NodeId> ids;
    for (const auto& file : project.files)
        for (const auto& fn : file.functions)
            walk(fn.body, [&](const Node& n) {
                if (is_statement(n.kind) && n.kind != NodeKind::Block) ids.push_back(n.id);
                return true;
            });
    std::sort(ids.begin(), ids.end());
    return ids;
}

struct NaiveScore {
    int ef = 0, ep = 0, nf = 0, np = 0;
    double ochiai = 0, tarantula = 0;
};

/// Quadratic recomputation: for every statement, scan every trace.
inline std::map<NodeId, NaiveScore> naive_scores(const Project& project, const std::vector<RawTrace>& traces)
{
    int total_failed = 0, total_passed = 0;
    for (const auto& t : traces) (t.passed ? total_passed : total_failed)++;
    std::map<NodeId, NaiveScore> out;
    for (NodeId s : all_statements(project)) {
        NaiveScore c;
        for (const auto& t : traces) {
            bool hit = t.covered.count(s) > 0;
            if (hit && !t.passed) ++c.ef;
            if (hit && t.passed) ++c.ep;
            if (!hit && !t.passed) ++c.nf;
            if (!hit && t.passed) ++c.np;
        }
        double a = std::sqrt(double(c.ef + c.nf) * double(c.ef + c.ep));
        c.ochiai = a > 0 ? c.ef / a : 0.0;
        double f = total_failed > 0 ? double(c.ef) / total_failed : 0.0;
        double p = total_passed > 0 ? double(c.ep) / total_passed : 0.0;
        c.tarantula = f + p > 0 ? f / (f + p) : 0.0;
        out[s] = c;
    }
    return out;
}

/// Statements with positive Ochiai score, highest first, ties by id.
inline std::vector<NodeId> suspicious_statements(const std::map<NodeId, NaiveScore>& scores, std::size_t limit)
{
    std::vector<std::pair<double, NodeId>> v;
    for (const auto& [id, s] : scores)
        if (s.ochiai > 0) v.emplace_back(-s.ochiai, id);
    std::sort(v.begin(), v.end());
    if (v.size() > limit) v.resize(limit);
    std::vector<NodeId> out;
    for (const auto& p : v) out.push_back(p.second);
    return out;
}

inline const Node* find_node(const Node& root, NodeId id)
{
    const Node* hit = nullptr;
    walk(root, [&](const Node& n) {
        if (n.id == id) hit = &n;
        return hit == nullptr;
    });
    return hit;
}

inline const Node* find_node(const Project& project, NodeId id)
{
    for (const auto& file : project.files)
        for (const auto& fn : file.functions)
            if (const Node* n = find_node(fn.body, id)) return n;
    return nullptr;
}

/// Expressions that belong to `stmt` itself (nested statements excluded).
inline void own_expressions(const Node& stmt, std::vector<const Node*>& out)
{
    for (const auto& child : stmt.children) {
        if (is_statement(child.kind)) continue;
        walk(child, [&](const Node& n) {
            out.push_back(&n);
            return true;
        });
    }
}

struct MutantCount {
    std::size_t points = 0;
    std::size_t mutants = 0;     // every (point, mutation) pair
    std::size_t well_typed = 0;  // of which pass the static checker
};

/// Brute-force enumeration of relational / logical mutants of the
/// suspicious statements: each relational operator to the five others,
/// && <-> ||, negation of a logical binary, and removal of a `!`.
inline MutantCount enumerate_relational_mutants(const Project& project, const std::vector<NodeId>& statements)
{
    static const BinaryOp relational[] = {BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt,
                                          BinaryOp::Ge, BinaryOp::Eq, BinaryOp::Ne};
    MutantCount count;
    auto consider = [&](NodeId target, Node replacement) {
        ++count.mutants;
        auto mutated = splice(project, target, {std::move(replacement)});
        if (mutated && !check_project(*mutated)) ++count.well_typed;
    };
    for (NodeId sid : statements) {
        const Node* stmt = find_node(project, sid);
        std::vector<const Node*> exprs;
        own_expressions(*stmt, exprs);
        for (const Node* e : exprs) {
            if (e->kind == NodeKind::Binary) {
                BinaryOp op = e->binary_op();
                bool rel = std::find(std::begin(relational), std::end(relational), op) != std::end(relational);
                bool logic = op == BinaryOp::And || op == BinaryOp::Or;
                if (!rel && !logic) continue;
                ++count.points;
                if (rel) {
                    for (BinaryOp other : relational) {
                        if (other == op) continue;
                        Node m = *e;
                        m.op = static_cast<std::uint8_t>(other);
                        consider(e->id, std::move(m));
                    }
                } else {
                    Node swapped = *e;
                    swapped.op = static_cast<std::uint8_t>(op == BinaryOp::And ? BinaryOp::Or : BinaryOp::And);
                    consider(e->id, std::move(swapped));
                    Node neg;
                    neg.kind = NodeKind::Unary;
                    neg.op = static_cast<std::uint8_t>(UnaryOp::Not);
                    neg.children.push_back(*e);
                    consider(e->id, std::move(neg));
                }
            } else if (e->kind == NodeKind::Unary && e->unary_op() == UnaryOp::Not) {
                ++count.points;
                consider(e->id, e->children[0]);
            }
        }
    }
    return count;
}

/// Distinct printed statements (blocks excluded) of the given files.
inline std::set<std::string> printed_statements(const Project& project, const std::set<std::string>& paths)
{
    std::set<std::string> out;
    for (const auto& file : project.files) {
        if (!paths.count(file.path)) continue;
        for (const auto& fn : file.functions)
            walk(fn.body, [&](const Node& n) {
                if (is_statement(n.kind) && n.kind != NodeKind::Block) out.insert(print_statement(n));
                return true;
            });
    }
    return out;
}

/// Pearson chi-square statistic of observed counts against expected probabilities.
inline double chi_square(const std::vector<std::size_t>& observed, const std::vector<double>& p)
{
    std::size_t n = 0;
    for (auto o : observed) n += o;
    double chi = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = p[i] * double(n);
        chi += (double(observed[i]) - e) * (double(observed[i]) - e) / e;
    }
    return chi;
}

/// Upper 1% critical values of the chi-square distribution by degrees of freedom.
inline double chi_square_critical_1pct(int dof)
{
    static const double table[] = {0, 6.635, 9.210, 11.345, 13.277, 15.086, 16.812};
    return table[dof];
}

}  // namespace gvr::oracle
