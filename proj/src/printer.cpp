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

#include "gvrepair/printer.hpp"

#include <charconv>

namespace gvr {

namespace {

int precedence(const Node& e)
{
    switch (e.kind) {
    case NodeKind::Binary:
        switch (e.binary_op()) {
        case BinaryOp::Or: return 1;
        case BinaryOp::And: return 2;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return 3;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return 4;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 5;
        default: return 6;
        }
    case NodeKind::Unary: return 7;
    default: return 9;
    }
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        default: out += c;
        }
    }
    return out + "\"";
}

void print_expr(const Node& e, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out)
{
    if (precedence(child) < min_prec) {
        out += '(';
        print_expr(child, out);
        out += ')';
    } else {
        print_expr(child, out);
    }
}

void print_args(const Node& e, std::size_t first, std::string& out)
{
    for (std::size_t i = first; i < e.children.size(); ++i) {
        if (i > first) {
            out += ", ";
        }
        print_expr(e.children[i], out);
    }
}

void print_expr(const Node& e, std::string& out)
{
    switch (e.kind) {
    case NodeKind::Binary: {
        int p = precedence(e);
        print_child(e.children[0], p, out);
        out += ' ';
        out += to_string(e.binary_op());
        out += ' ';
        print_child(e.children[1], p + 1, out);  // left-associative
        break;
    }
    case NodeKind::Unary:
        out += to_string(e.unary_op());
        print_child(e.children[0], 7, out);
        break;
    case NodeKind::Call:
        if (e.method) {
            print_child(e.children[0], 8, out);
            out += '.';
            out += e.name;
            out += '(';
            print_args(e, 1, out);
        } else {
            out += e.name;
            out += '(';
            print_args(e, 0, out);
        }
        out += ')';
        break;
    case NodeKind::VarRef:
        out += e.name;
        break;
    case NodeKind::Literal:
        out += format_scalar(e.literal);
        break;
    case NodeKind::Index:
        print_child(e.children[0], 8, out);
        out += '[';
        print_expr(e.children[1], out);
        out += ']';
        break;
    case NodeKind::ArrayLit:
        out += '[';
        print_args(e, 0, out);
        out += ']';
        break;
    default:
        out += "<stmt>";
        break;
    }
}

void indent_to(int indent, std::string& out)
{
    out.append(static_cast<std::size_t>(indent) * 4, ' ');
}

void print_stmt(const Node& s, int indent, std::string& out);

void print_block(const Node& block, int indent, std::string& out)
{
    out += "{\n";
    for (const auto& child : block.children) {
        print_stmt(child, indent + 1, out);
    }
    indent_to(indent, out);
    out += '}';
}

void print_if_tail(const Node& s, int indent, std::string& out)
{
    out += "if (";
    print_expr(s.children[0], out);
    out += ") ";
    print_block(s.children[1], indent, out);
    if (s.children.size() > 2) {
        const Node& els = s.children[2];
        out += " else ";
        if (els.children.size() == 1 && els.children[0].kind == NodeKind::If) {
            print_if_tail(els.children[0], indent, out);
        } else {
            print_block(els, indent, out);
        }
    }
}

void print_stmt(const Node& s, int indent, std::string& out)
{
    indent_to(indent, out);
    switch (s.kind) {
    case NodeKind::Block:
        print_block(s, indent, out);
        break;
    case NodeKind::VarDecl:
        out += "let ";
        out += s.name;
        if (s.declared) {
            out += ": ";
            out += s.declared->name();
        }
        out += " = ";
        print_expr(s.children[0], out);
        out += ';';
        break;
    case NodeKind::Assign:
        print_expr(s.children[0], out);
        out += " = ";
        print_expr(s.children[1], out);
        out += ';';
        break;
    case NodeKind::If:
        print_if_tail(s, indent, out);
        break;
    case NodeKind::While:
        out += "while (";
        print_expr(s.children[0], out);
        out += ") ";
        print_block(s.children[1], indent, out);
        break;
    case NodeKind::Return:
        out += "return";
        if (!s.children.empty()) {
            out += ' ';
            print_expr(s.children[0], out);
        }
        out += ';';
        break;
    case NodeKind::ExprStmt:
        print_expr(s.children[0], out);
        out += ';';
        break;
    default:
        print_expr(s, out);
        break;
    }
    out += '\n';
}

}  // namespace

std::string format_scalar(const Scalar& value)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                char buf[64];
                auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
                std::string s(buf, p);
                if (s.find_first_of(".eEn") == std::string::npos) {
                    s += ".0";
                }
                return s;
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return quote(v);
            }
        },
        value);
}

std::string print_expression(const Node& expr)
{
    std::string out;
    print_expr(expr, out);
    return out;
}

std::string print_statement(const Node& stmt, int indent)
{
    std::string out;
    print_stmt(stmt, indent, out);
    out.pop_back();
    return out;
}

std::string print_function(const Function& fn)
{
    std::string out = "fn " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += fn.params[i].name + ": " + fn.params[i].type.name();
    }
    out += ")";
    if (fn.declared_return) {
        out += " -> " + fn.declared_return->name();
    }
    out += ' ';
    print_block(fn.body, 0, out);
    out += '\n';
    return out;
}

std::string print_file(const SourceFile& file)
{
    std::string out;
    for (std::size_t i = 0; i < file.functions.size(); ++i) {
        if (i > 0) {
            out += '\n';
        }
        out += print_function(file.functions[i]);
    }
    return out;
}

std::string print_node(const Project& project, NodeId id)
{
    ProjectIndex index(project);
    const Node& node = *index.at(id).node;
    return is_statement(node.kind) ? print_statement(node) : print_expression(node);
}

}  // namespace gvr
