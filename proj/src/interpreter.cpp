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

#include "gvrepair/interpreter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gvr {

namespace {

struct Trap {
    std::string kind;
    const Node* at;
};

struct OutOfSteps {};

enum class Flow { Next, Return };

struct Frame {
    std::vector<std::pair<std::string_view, Value>> vars;
    Value result;
};

std::int64_t wrap_add(std::int64_t a, std::int64_t b)
{
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::int64_t wrap_sub(std::int64_t a, std::int64_t b)
{
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

std::int64_t wrap_mul(std::int64_t a, std::int64_t b)
{
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

class Run {
public:
    Run(const Project& project, const std::unordered_map<std::string_view, const Function*>& functions,
        std::uint64_t budget)
        : functions_(functions), budget_(budget), covered_(static_cast<std::size_t>(project.next_id) + 1, 0)
    {
    }

    ExecutionTrace go(std::string_view entry, const std::vector<Value>& args)
    {
        ExecutionTrace trace;
        try {
            auto it = functions_.find(entry);
            if (it == functions_.end()) {
                throw Trap{"unknown-function", nullptr};
            }
            trace.outcome = NormalOutcome{invoke(*it->second, args, nullptr)};
        } catch (const Trap& t) {
            trace.outcome = RuntimeErrorOutcome{t.kind, t.at != nullptr ? t.at->id : 0, t.at != nullptr ? t.at->line : 0};
        } catch (const OutOfSteps&) {
            trace.outcome = TimeoutOutcome{};
        }
        for (std::size_t i = 0; i < covered_.size(); ++i) {
            if (covered_[i] != 0) {
                trace.covered.push_back(static_cast<NodeId>(i));
            }
        }
        trace.steps = steps_;
        return trace;
    }

private:
    void tick()
    {
        if (++steps_ > budget_) {
            throw OutOfSteps{};
        }
    }

    Value invoke(const Function& fn, const std::vector<Value>& args, const Node* site)
    {
        if (args.size() != fn.params.size()) {
            throw Trap{"arity-mismatch", site};
        }
        if (depth_ >= kMaxCallDepth) {
            throw Trap{"stack-overflow", site};
        }
        ++depth_;
        Frame frame;
        for (std::size_t i = 0; i < args.size(); ++i) {
            frame.vars.emplace_back(fn.params[i].name, args[i]);
        }
        frames_.push_back(std::move(frame));
        exec_block(fn.body);
        Value result = std::move(frames_.back().result);
        frames_.pop_back();
        --depth_;
        return result;
    }

    Value* lookup(std::string_view name)
    {
        auto& vars = frames_.back().vars;
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
            if (it->first == name) {
                return &it->second;
            }
        }
        return nullptr;
    }

    Flow exec_block(const Node& block)
    {
        auto& vars = frames_.back().vars;
        std::size_t mark = vars.size();
        Flow flow = Flow::Next;
        for (const auto& s : block.children) {
            flow = exec(s);
            if (flow == Flow::Return) {
                break;
            }
        }
        frames_.back().vars.resize(mark);
        return flow;
    }

    bool truth(const Node& cond)
    {
        Value v = eval(cond);
        if (!v.is_bool()) {
            throw Trap{"type-error", &cond};
        }
        return v.as_bool();
    }

    Flow exec(const Node& s)
    {
        if (s.kind == NodeKind::Block) {
            return exec_block(s);
        }
        tick();
        covered_[static_cast<std::size_t>(s.id)] = 1;
        switch (s.kind) {
        case NodeKind::VarDecl: {
            Value v = eval(s.children[0]);
            frames_.back().vars.emplace_back(s.name, std::move(v));
            return Flow::Next;
        }
        case NodeKind::Assign: {
            Value v = eval(s.children[1]);
            lvalue(s.children[0]) = std::move(v);
            return Flow::Next;
        }
        case NodeKind::If:
            if (truth(s.children[0])) {
                return exec_block(s.children[1]);
            }
            if (s.children.size() > 2) {
                return exec_block(s.children[2]);
            }
            return Flow::Next;
        case NodeKind::While:
            while (truth(s.children[0])) {
                if (exec_block(s.children[1]) == Flow::Return) {
                    return Flow::Return;
                }
                tick();
            }
            return Flow::Next;
        case NodeKind::Return:
            frames_.back().result = s.children.empty() ? Value{} : eval(s.children[0]);
            return Flow::Return;
        case NodeKind::ExprStmt:
            eval(s.children[0]);
            return Flow::Next;
        default:
            throw Trap{"type-error", &s};
        }
    }

    Value& lvalue(const Node& target)
    {
        if (target.kind == NodeKind::VarRef) {
            Value* slot = lookup(target.name);
            if (slot == nullptr) {
                throw Trap{"undefined-variable", &target};
            }
            return *slot;
        }
        if (target.kind == NodeKind::Index) {
            Value index = eval(target.children[1]);
            Value& base = lvalue(target.children[0]);
            if (!base.is_array() || !index.is_int()) {
                throw Trap{"type-error", &target};
            }
            Array& arr = base.mutable_array();
            std::int64_t i = index.as_int();
            if (i < 0 || i >= static_cast<std::int64_t>(arr.size())) {
                throw Trap{"index-out-of-bounds", &target};
            }
            return arr[static_cast<std::size_t>(i)];
        }
        throw Trap{"type-error", &target};
    }

    Value eval(const Node& e)
    {
        tick();
        switch (e.kind) {
        case NodeKind::Literal:
            return std::visit([](const auto& v) { return Value(v); }, e.literal);
        case NodeKind::VarRef: {
            Value* slot = lookup(e.name);
            if (slot == nullptr) {
                throw Trap{"undefined-variable", &e};
            }
            return *slot;
        }
        case NodeKind::ArrayLit: {
            Array a;
            a.reserve(e.children.size());
            for (const auto& c : e.children) {
                a.push_back(eval(c));
            }
            return Value(std::move(a));
        }
        case NodeKind::Index:
            return index(e, eval(e.children[0]), eval(e.children[1]));
        case NodeKind::Unary: {
            Value v = eval(e.children[0]);
            if (e.unary_op() == UnaryOp::Not) {
                if (!v.is_bool()) throw Trap{"type-error", &e};
                return Value(!v.as_bool());
            }
            if (v.is_int()) return Value(wrap_sub(0, v.as_int()));
            if (v.is_float()) return Value(-v.as_float());
            throw Trap{"type-error", &e};
        }
        case NodeKind::Binary:
            return binary(e);
        case NodeKind::Call:
            return call(e);
        default:
            throw Trap{"type-error", &e};
        }
    }

    Value index(const Node& e, const Value& base, const Value& idx)
    {
        if (!idx.is_int()) {
            throw Trap{"type-error", &e};
        }
        std::int64_t i = idx.as_int();
        if (base.is_array()) {
            const auto& arr = base.as_array();
            if (i < 0 || i >= static_cast<std::int64_t>(arr.size())) {
                throw Trap{"index-out-of-bounds", &e};
            }
            return arr[static_cast<std::size_t>(i)];
        }
        if (base.is_string()) {
            const auto& s = base.as_string();
            if (i < 0 || i >= static_cast<std::int64_t>(s.size())) {
                throw Trap{"index-out-of-bounds", &e};
            }
            return Value(std::string(1, s[static_cast<std::size_t>(i)]));
        }
        throw Trap{"type-error", &e};
    }

    Value binary(const Node& e)
    {
        BinaryOp op = e.binary_op();
        if (is_logical(op)) {
            bool lhs = truth(e.children[0]);
            if (op == BinaryOp::And ? !lhs : lhs) {
                return Value(lhs);
            }
            return Value(truth(e.children[1]));
        }
        Value a = eval(e.children[0]);
        Value b = eval(e.children[1]);
        if (op == BinaryOp::Eq || op == BinaryOp::Ne) {
            bool eq = (a.is_numeric() && b.is_numeric()) ? a.as_number() == b.as_number() : a == b;
            if (a.is_int() && b.is_int()) eq = a.as_int() == b.as_int();
            return Value(op == BinaryOp::Eq ? eq : !eq);
        }
        if (is_relational(op)) {
            int cmp = 0;
            if (a.is_int() && b.is_int()) {
                cmp = a.as_int() < b.as_int() ? -1 : (a.as_int() > b.as_int() ? 1 : 0);
            } else if (a.is_numeric() && b.is_numeric()) {
                double x = a.as_number();
                double y = b.as_number();
                cmp = x < y ? -1 : (x > y ? 1 : 0);
            } else if (a.is_string() && b.is_string()) {
                cmp = a.as_string().compare(b.as_string());
                cmp = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
            } else {
                throw Trap{"type-error", &e};
            }
            switch (op) {
            case BinaryOp::Lt: return Value(cmp < 0);
            case BinaryOp::Le: return Value(cmp <= 0);
            case BinaryOp::Gt: return Value(cmp > 0);
            default: return Value(cmp >= 0);
            }
        }
        if (op == BinaryOp::Add && a.is_string() && b.is_string()) {
            return Value(a.as_string() + b.as_string());
        }
        if (a.is_int() && b.is_int()) {
            std::int64_t x = a.as_int();
            std::int64_t y = b.as_int();
            switch (op) {
            case BinaryOp::Add: return Value(wrap_add(x, y));
            case BinaryOp::Sub: return Value(wrap_sub(x, y));
            case BinaryOp::Mul: return Value(wrap_mul(x, y));
            case BinaryOp::Div:
            case BinaryOp::Mod:
                if (y == 0) throw Trap{"div-by-zero", &e};
                if (x == std::numeric_limits<std::int64_t>::min() && y == -1) {
                    return Value(op == BinaryOp::Div ? x : std::int64_t{0});
                }
                return Value(op == BinaryOp::Div ? x / y : x % y);
            default: break;
            }
        } else if (a.is_numeric() && b.is_numeric()) {
            double x = a.as_number();
            double y = b.as_number();
            switch (op) {
            case BinaryOp::Add: return Value(x + y);
            case BinaryOp::Sub: return Value(x - y);
            case BinaryOp::Mul: return Value(x * y);
            case BinaryOp::Div:
                if (y == 0.0) throw Trap{"div-by-zero", &e};
                return Value(x / y);
            case BinaryOp::Mod:
                if (y == 0.0) throw Trap{"div-by-zero", &e};
                return Value(std::fmod(x, y));
            default: break;
            }
        }
        throw Trap{"type-error", &e};
    }

    Value call(const Node& e)
    {
        std::vector<Value> args;
        args.reserve(e.children.size());
        for (const auto& c : e.children) {
            args.push_back(eval(c));
        }
        if (e.method) {
            return method(e, args);
        }
        auto it = functions_.find(e.name);
        if (it != functions_.end()) {
            return invoke(*it->second, args, &e);
        }
        return builtin(e, args);
    }

    Value builtin(const Node& e, const std::vector<Value>& args)
    {
        auto need = [&](std::size_t n) {
            if (args.size() != n) throw Trap{"arity-mismatch", &e};
        };
        const std::string& name = e.name;
        if (name == "abs") {
            need(1);
            if (args[0].is_int()) return Value(args[0].as_int() < 0 ? wrap_sub(0, args[0].as_int()) : args[0].as_int());
            if (args[0].is_float()) return Value(std::fabs(args[0].as_float()));
        } else if (name == "min" || name == "max") {
            need(2);
            const Value& a = args[0];
            const Value& b = args[1];
            bool pick_a = name == "min" ? !(b.is_numeric() && a.is_numeric() && b.as_number() < a.as_number())
                                        : !(b.is_numeric() && a.is_numeric() && b.as_number() > a.as_number());
            if (a.is_int() && b.is_int()) return pick_a ? a : b;
            if (a.is_numeric() && b.is_numeric()) return Value(pick_a ? a.as_number() : b.as_number());
        } else if (name == "to_float") {
            need(1);
            if (args[0].is_numeric()) return Value(args[0].as_number());
        } else if (name == "to_int") {
            need(1);
            if (args[0].is_int()) return args[0];
            if (args[0].is_float() && std::isfinite(args[0].as_float())
                && std::fabs(args[0].as_float()) < 9.2e18) {
                return Value(static_cast<std::int64_t>(args[0].as_float()));
            }
        } else if (name == "str") {
            need(1);
            return Value(args[0].to_display());
        } else {
            throw Trap{"unknown-function", &e};
        }
        throw Trap{"type-error", &e};
    }

    Value method(const Node& e, const std::vector<Value>& args)
    {
        const Value& recv = args[0];
        auto need = [&](std::size_t n) {
            if (args.size() != n + 1) throw Trap{"arity-mismatch", &e};
        };
        if (e.name == "length") {
            need(0);
            if (recv.is_string()) return Value(static_cast<std::int64_t>(recv.as_string().size()));
            if (recv.is_array()) return Value(static_cast<std::int64_t>(recv.as_array().size()));
        } else if (e.name == "substr") {
            need(2);
            if (recv.is_string() && args[1].is_int() && args[2].is_int()) {
                const auto& s = recv.as_string();
                std::int64_t from = args[1].as_int();
                std::int64_t to = args[2].as_int();
                if (from < 0 || to < from || to > static_cast<std::int64_t>(s.size())) {
                    throw Trap{"index-out-of-bounds", &e};
                }
                return Value(s.substr(static_cast<std::size_t>(from), static_cast<std::size_t>(to - from)));
            }
        } else if (e.name == "append") {
            need(1);
            if (recv.is_array()) {
                Array a = recv.as_array();
                a.push_back(args[1]);
                return Value(std::move(a));
            }
        } else {
            throw Trap{"unknown-function", &e};
        }
        throw Trap{"type-error", &e};
    }

    const std::unordered_map<std::string_view, const Function*>& functions_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    int depth_ = 0;
    std::vector<std::uint8_t> covered_;
    std::vector<Frame> frames_;
};

}  // namespace

Interpreter::Interpreter(const Project& project) : project_(project)
{
    for (const auto& file : project.files) {
        for (const auto& fn : file.functions) {
            functions_.emplace(fn.name, &fn);
        }
    }
}

ExecutionTrace Interpreter::run(std::string_view entry, const std::vector<Value>& args, std::uint64_t step_budget) const
{
    if (step_budget == 0) {
        throw std::invalid_argument("step budget must be positive");
    }
    Run run(project_, functions_, step_budget);
    return run.go(entry, args);
}

ExecutionTrace execute(const Project& project, std::string_view entry, const std::vector<Value>& args,
                       std::uint64_t step_budget)
{
    return Interpreter(project).run(entry, args, step_budget);
}

}  // namespace gvr
