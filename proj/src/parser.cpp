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

#include "gvrepair/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace gvr {

namespace {

enum class Tok { Ident, Int, Float, String, Punct, Keyword, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

const std::set<std::string, std::less<>> kKeywords = {
    "fn", "let", "if", "else", "while", "return", "true", "false", "int", "float", "bool", "string",
};

class Lexer {
public:
    Lexer(const std::string& text, std::string file) : src_(text), file_(std::move(file)) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text += advance();
                }
                t.kind = kKeywords.count(t.text) ? Tok::Keyword : Tok::Ident;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                lex_number(t);
            } else if (c == '"') {
                lex_string(t);
            } else {
                lex_punct(t);
            }
            out.push_back(std::move(t));
        }
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw LangError(ErrorCode::SyntaxError,
                        file_ + ":" + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg);
    }

    char advance()
    {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space()
    {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    void lex_number(Token& t)
    {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            t.text += advance();
        }
        t.kind = Tok::Int;
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            t.kind = Tok::Float;
            t.text += advance();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text += advance();
            }
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_;
            std::string exp(1, src_[pos_]);
            std::size_t k = pos_ + 1;
            if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) {
                exp += src_[k++];
            }
            if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
                while (pos_ < k) {
                    advance();
                }
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    exp += advance();
                }
                t.text += exp;
                t.kind = Tok::Float;
            } else {
                pos_ = save;
            }
        }
    }

    void lex_string(Token& t)
    {
        advance();
        t.kind = Tok::String;
        for (;;) {
            if (pos_ >= src_.size() || src_[pos_] == '\n') {
                fail("unterminated string literal");
            }
            char c = advance();
            if (c == '"') {
                return;
            }
            if (c == '\\') {
                if (pos_ >= src_.size()) {
                    fail("unterminated string literal");
                }
                char e = advance();
                switch (e) {
                case 'n': t.text += '\n'; break;
                case 't': t.text += '\t'; break;
                case '\\': t.text += '\\'; break;
                case '"': t.text += '"'; break;
                default: fail(std::string("unknown escape \\") + e);
                }
            } else {
                t.text += c;
            }
        }
    }

    void lex_punct(Token& t)
    {
        static const char* two[] = {"<=", ">=", "==", "!=", "&&", "||", "->"};
        t.kind = Tok::Punct;
        if (pos_ + 1 < src_.size()) {
            std::string pair = src_.substr(pos_, 2);
            for (const char* p : two) {
                if (pair == p) {
                    t.text = pair;
                    advance();
                    advance();
                    return;
                }
            }
        }
        char c = src_[pos_];
        if (std::string_view("+-*/%<>=!(){}[],;:.").find(c) == std::string_view::npos) {
            fail(std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, advance());
    }

    const std::string& src_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string file) : toks_(std::move(tokens)), file_(std::move(file)) {}

    std::vector<Function> parse_file()
    {
        std::vector<Function> fns;
        while (peek().kind != Tok::End) {
            fns.push_back(parse_function());
        }
        return fns;
    }

    Node parse_expr_only()
    {
        Node e = parse_expr();
        expect_end();
        return e;
    }

    Node parse_statement_only()
    {
        Node s = parse_statement();
        expect_end();
        return s;
    }

    Type parse_type_only()
    {
        Type t = parse_type();
        expect_end();
        return t;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    bool is(std::string_view text) const
    {
        const auto& t = peek();
        return (t.kind == Tok::Punct || t.kind == Tok::Keyword) && t.text == text;
    }

    bool accept(std::string_view text)
    {
        if (is(text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const
    {
        throw LangError(ErrorCode::SyntaxError,
                        file_ + ":" + std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg);
    }

    void expect(std::string_view text)
    {
        if (!accept(text)) {
            const auto& t = peek();
            fail(t, "expected '" + std::string(text) + "' but found " + describe(t));
        }
    }

    void expect_end()
    {
        if (peek().kind != Tok::End) {
            fail(peek(), "unexpected trailing " + describe(peek()));
        }
    }

    static std::string describe(const Token& t)
    {
        if (t.kind == Tok::End) {
            return "end of input";
        }
        return "'" + t.text + "'";
    }

    std::string expect_ident()
    {
        const auto& t = peek();
        if (t.kind != Tok::Ident) {
            fail(t, "expected identifier but found " + describe(t));
        }
        ++pos_;
        return t.text;
    }

    Node make(NodeKind kind, const Token& at) const
    {
        Node n;
        n.kind = kind;
        n.line = at.line;
        n.column = at.column;
        return n;
    }

    Type parse_type()
    {
        const auto& t = peek();
        if (accept("[")) {
            Type inner = parse_type();
            expect("]");
            return inner.array_of();
        }
        if (accept("int")) return Type::int_();
        if (accept("float")) return Type::float_();
        if (accept("bool")) return Type::bool_();
        if (accept("string")) return Type::string_();
        fail(t, "expected type but found " + describe(t));
    }

    Function parse_function()
    {
        const auto& start = peek();
        expect("fn");
        Function fn;
        fn.line = start.line;
        fn.name = expect_ident();
        expect("(");
        if (!is(")")) {
            do {
                Param p;
                p.name = expect_ident();
                expect(":");
                p.type = parse_type();
                fn.params.push_back(std::move(p));
            } while (accept(","));
        }
        expect(")");
        if (accept("->")) {
            fn.declared_return = parse_type();
        }
        fn.body = parse_block();
        return fn;
    }

    Node parse_block()
    {
        Node block = make(NodeKind::Block, peek());
        expect("{");
        while (!is("}")) {
            if (peek().kind == Tok::End) {
                fail(peek(), "unterminated block");
            }
            block.children.push_back(parse_statement());
        }
        expect("}");
        return block;
    }

    Node parse_if()
    {
        Node n = make(NodeKind::If, peek());
        expect("if");
        expect("(");
        n.children.push_back(parse_expr());
        expect(")");
        n.children.push_back(parse_block());
        if (accept("else")) {
            if (is("if")) {
                Node wrapper = make(NodeKind::Block, peek());
                wrapper.children.push_back(parse_if());
                n.children.push_back(std::move(wrapper));
            } else {
                n.children.push_back(parse_block());
            }
        }
        return n;
    }

    Node parse_statement()
    {
        const Token& t = peek();
        if (is("let")) {
            Node n = make(NodeKind::VarDecl, t);
            ++pos_;
            n.name = expect_ident();
            if (accept(":")) {
                n.declared = parse_type();
            }
            expect("=");
            n.children.push_back(parse_expr());
            expect(";");
            return n;
        }
        if (is("if")) {
            return parse_if();
        }
        if (is("while")) {
            Node n = make(NodeKind::While, t);
            ++pos_;
            expect("(");
            n.children.push_back(parse_expr());
            expect(")");
            n.children.push_back(parse_block());
            return n;
        }
        if (is("return")) {
            Node n = make(NodeKind::Return, t);
            ++pos_;
            if (!is(";")) {
                n.children.push_back(parse_expr());
            }
            expect(";");
            return n;
        }
        if (is("{")) {
            return parse_block();
        }
        Node lhs = parse_expr();
        if (accept("=")) {
            if (lhs.kind != NodeKind::VarRef && lhs.kind != NodeKind::Index) {
                fail(t, "invalid assignment target");
            }
            Node n = make(NodeKind::Assign, t);
            n.children.push_back(std::move(lhs));
            n.children.push_back(parse_expr());
            expect(";");
            return n;
        }
        Node n = make(NodeKind::ExprStmt, t);
        n.children.push_back(std::move(lhs));
        expect(";");
        return n;
    }

    Node parse_expr() { return parse_binary(0); }

    // Precedence levels, lowest first.
    static int level_of(std::string_view op)
    {
        if (op == "||") return 0;
        if (op == "&&") return 1;
        if (op == "==" || op == "!=") return 2;
        if (op == "<" || op == "<=" || op == ">" || op == ">=") return 3;
        if (op == "+" || op == "-") return 4;
        if (op == "*" || op == "/" || op == "%") return 5;
        return -1;
    }

    static BinaryOp binary_of(std::string_view op)
    {
        static constexpr std::string_view names[] = {"+", "-", "*", "/", "%", "<", "<=", ">", ">=", "==", "!=", "&&", "||"};
        for (std::size_t i = 0; i < std::size(names); ++i) {
            if (names[i] == op) {
                return static_cast<BinaryOp>(i);
            }
        }
        return BinaryOp::Add;
    }

    Node parse_binary(int level)
    {
        if (level > 5) {
            return parse_unary();
        }
        Node lhs = parse_binary(level + 1);
        for (;;) {
            const Token& t = peek();
            if (t.kind != Tok::Punct || level_of(t.text) != level) {
                return lhs;
            }
            ++pos_;
            Node n = make(NodeKind::Binary, t);
            n.op = static_cast<std::uint8_t>(binary_of(t.text));
            n.children.push_back(std::move(lhs));
            n.children.push_back(parse_binary(level + 1));
            lhs = std::move(n);
        }
    }

    Node parse_unary()
    {
        const Token& t = peek();
        if (is("-") || is("!")) {
            ++pos_;
            Node n = make(NodeKind::Unary, t);
            n.op = static_cast<std::uint8_t>(t.text == "-" ? UnaryOp::Neg : UnaryOp::Not);
            n.children.push_back(parse_unary());
            return n;
        }
        return parse_postfix();
    }

    void parse_args(Node& call, std::string_view close)
    {
        if (!is(close)) {
            do {
                call.children.push_back(parse_expr());
            } while (accept(","));
        }
        expect(close);
    }

    Node parse_postfix()
    {
        Node e = parse_primary();
        for (;;) {
            const Token& t = peek();
            if (accept("[")) {
                Node n = make(NodeKind::Index, t);
                n.children.push_back(std::move(e));
                n.children.push_back(parse_expr());
                expect("]");
                e = std::move(n);
            } else if (accept(".")) {
                Node n = make(NodeKind::Call, t);
                n.method = true;
                n.name = expect_ident();
                n.children.push_back(std::move(e));
                expect("(");
                parse_args(n, ")");
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    Node parse_primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int: {
            ++pos_;
            Node n = make(NodeKind::Literal, t);
            std::int64_t v = 0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc()) {
                fail(t, "integer literal out of range");
            }
            n.literal = v;
            return n;
        }
        case Tok::Float: {
            ++pos_;
            Node n = make(NodeKind::Literal, t);
            double v = 0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc()) {
                fail(t, "bad float literal");
            }
            n.literal = v;
            return n;
        }
        case Tok::String: {
            ++pos_;
            Node n = make(NodeKind::Literal, t);
            n.literal = t.text;
            return n;
        }
        case Tok::Keyword:
            if (t.text == "true" || t.text == "false") {
                ++pos_;
                Node n = make(NodeKind::Literal, t);
                n.literal = t.text == "true";
                return n;
            }
            break;
        case Tok::Ident: {
            ++pos_;
            if (accept("(")) {
                Node n = make(NodeKind::Call, t);
                n.name = t.text;
                parse_args(n, ")");
                return n;
            }
            Node n = make(NodeKind::VarRef, t);
            n.name = t.text;
            return n;
        }
        case Tok::Punct:
            if (accept("(")) {
                Node e = parse_expr();
                expect(")");
                return e;
            }
            if (accept("[")) {
                Node n = make(NodeKind::ArrayLit, t);
                parse_args(n, "]");
                return n;
            }
            break;
        default:
            break;
        }
        fail(t, "expected expression but found " + describe(t));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string file_;
};

}  // namespace

Project parse_project(std::vector<SourceText> files)
{
    if (files.empty()) {
        throw LangError(ErrorCode::EmptyProject, "empty project: no source files");
    }
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
    Project project;
    std::set<std::string, std::less<>> names;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (i > 0 && files[i].path == files[i - 1].path) {
            throw LangError(ErrorCode::DuplicatePath, "duplicate file path " + files[i].path);
        }
        SourceFile file;
        file.path = files[i].path;
        file.module = module_of(file.path);
        Parser parser(Lexer(files[i].text, file.path).run(), file.path);
        file.functions = parser.parse_file();
        for (const auto& fn : file.functions) {
            if (!names.insert(fn.name).second) {
                throw LangError(ErrorCode::DuplicateFunction,
                                file.path + ":" + std::to_string(fn.line) + ": duplicate function name '" + fn.name + "'");
            }
        }
        project.files.push_back(std::move(file));
    }
    NodeId next = 1;
    for (auto& file : project.files) {
        for (auto& fn : file.functions) {
            renumber(fn.body, next);
        }
    }
    project.next_id = next;
    return project;
}

Node parse_expression(const std::string& text)
{
    Parser parser(Lexer(text, "<expr>").run(), "<expr>");
    return parser.parse_expr_only();
}

Node parse_statement(const std::string& text)
{
    Parser parser(Lexer(text, "<stmt>").run(), "<stmt>");
    return parser.parse_statement_only();
}

Type parse_type(const std::string& text)
{
    Parser parser(Lexer(text, "<type>").run(), "<type>");
    return parser.parse_type_only();
}

}  // namespace gvr
