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

#include "gvrepair/diff.hpp"

#include <stdexcept>

namespace gvr {

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

namespace {

enum class Op { Keep, Del, Add };

// Myers' greedy O((N+M)D) algorithm with a stored trace for backtracking.
std::vector<Op> edit_script(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    const long n = static_cast<long>(a.size());
    const long m = static_cast<long>(b.size());
    const long max = n + m;
    const long offset = max + 1;
    std::vector<long> v(2 * max + 3, 0);
    std::vector<std::vector<long>> trace;
    long found_d = -1;
    for (long d = 0; d <= max; ++d) {
        trace.push_back(v);
        for (long k = -d; k <= d; k += 2) {
            long x;
            if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) x = v[offset + k + 1];
            else x = v[offset + k - 1] + 1;
            long y = x - k;
            while (x < n && y < m && a[x] == b[y]) {
                ++x;
                ++y;
            }
            v[offset + k] = x;
            if (x >= n && y >= m) {
                found_d = d;
                break;
            }
        }
        if (found_d >= 0) break;
    }
    std::vector<Op> ops;
    long x = n, y = m;
    for (long d = found_d; d > 0; --d) {
        const auto& pv = trace[d];
        long k = x - y;
        long prev_k;
        if (k == -d || (k != d && pv[offset + k - 1] < pv[offset + k + 1])) prev_k = k + 1;
        else prev_k = k - 1;
        long prev_x = pv[offset + prev_k];
        long prev_y = prev_x - prev_k;
        while (x > prev_x && y > prev_y) {
            ops.push_back(Op::Keep);
            --x;
            --y;
        }
        if (x == prev_x) ops.push_back(Op::Add);
        else ops.push_back(Op::Del);
        x = prev_x;
        y = prev_y;
    }
    while (x > 0 && y > 0) {
        ops.push_back(Op::Keep);
        --x;
        --y;
    }
    return {ops.rbegin(), ops.rend()};
}

}  // namespace

FileDiff diff_texts(const std::string& path, std::string_view before, std::string_view after, int context)
{
    auto a = split_lines(before);
    auto b = split_lines(after);
    auto ops = edit_script(a, b);

    FileDiff out{path, {}};
    const std::size_t ctx = static_cast<std::size_t>(context);
    std::size_t i = 0;
    // positions (old line, new line) before each op
    std::vector<std::size_t> old_pos(ops.size() + 1), new_pos(ops.size() + 1);
    for (std::size_t k = 0, x = 0, y = 0; k <= ops.size(); ++k) {
        old_pos[k] = x;
        new_pos[k] = y;
        if (k == ops.size()) break;
        if (ops[k] != Op::Add) ++x;
        if (ops[k] != Op::Del) ++y;
    }
    while (i < ops.size()) {
        if (ops[i] == Op::Keep) {
            ++i;
            continue;
        }
        // extend the change region while the gap of kept lines is small
        std::size_t start = i;
        std::size_t end = i;
        while (end < ops.size()) {
            std::size_t j = end;
            while (j < ops.size() && ops[j] != Op::Keep) ++j;
            std::size_t keep_end = j;
            while (keep_end < ops.size() && ops[keep_end] == Op::Keep) ++keep_end;
            end = j;
            if (keep_end < ops.size() && keep_end - j <= 2 * ctx) end = keep_end;
            else break;
        }
        std::size_t lo = start >= ctx ? start - ctx : 0;
        while (lo < start && ops[lo] != Op::Keep) ++lo;
        std::size_t hi = std::min(ops.size(), end + ctx);
        Hunk h;
        h.old_start = old_pos[lo];
        h.new_start = new_pos[lo];
        for (std::size_t k = lo; k < hi; ++k) {
            switch (ops[k]) {
            case Op::Keep:
                h.lines.push_back(" " + a[old_pos[k]]);
                ++h.old_count;
                ++h.new_count;
                break;
            case Op::Del:
                h.lines.push_back("-" + a[old_pos[k]]);
                ++h.old_count;
                break;
            case Op::Add:
                h.lines.push_back("+" + b[new_pos[k]]);
                ++h.new_count;
                break;
            }
        }
        // unified diff numbers lines from 1; an empty side points at the line before
        h.old_start = h.old_count > 0 ? h.old_start + 1 : h.old_start;
        h.new_start = h.new_count > 0 ? h.new_start + 1 : h.new_start;
        out.hunks.push_back(std::move(h));
        i = hi;
    }
    return out;
}

std::string format_unified(const std::vector<FileDiff>& files)
{
    std::string out;
    for (const auto& f : files) {
        if (f.hunks.empty()) continue;
        out += "--- a/" + f.path + "\n";
        out += "+++ b/" + f.path + "\n";
        for (const auto& h : f.hunks) {
            out += "@@ -" + std::to_string(h.old_start) + "," + std::to_string(h.old_count) + " +" +
                   std::to_string(h.new_start) + "," + std::to_string(h.new_count) + " @@\n";
            for (const auto& l : h.lines) out += l + "\n";
        }
    }
    return out;
}

namespace {

std::size_t parse_number(std::string_view s, std::size_t& pos)
{
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (start == pos) throw std::invalid_argument("malformed hunk header");
    return std::stoul(std::string(s.substr(start, pos - start)));
}

void expect_char(std::string_view s, std::size_t& pos, char c)
{
    if (pos >= s.size() || s[pos] != c) throw std::invalid_argument("malformed hunk header");
    ++pos;
}

}  // namespace

std::vector<FileDiff> parse_unified(std::string_view text)
{
    std::vector<FileDiff> files;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size();) {
        const std::string& l = lines[i];
        if (l.rfind("--- a/", 0) == 0) {
            if (i + 1 >= lines.size() || lines[i + 1].rfind("+++ b/", 0) != 0)
                throw std::invalid_argument("missing +++ header");
            files.push_back({lines[i + 1].substr(6), {}});
            i += 2;
            continue;
        }
        if (l.rfind("@@ ", 0) == 0) {
            if (files.empty()) throw std::invalid_argument("hunk before file header");
            Hunk h;
            std::size_t pos = 3;
            // a missing ",count" means one line
            expect_char(l, pos, '-');
            h.old_start = parse_number(l, pos);
            h.old_count = 1;
            if (pos < l.size() && l[pos] == ',') h.old_count = parse_number(l, ++pos);
            expect_char(l, pos, ' ');
            expect_char(l, pos, '+');
            h.new_start = parse_number(l, pos);
            h.new_count = 1;
            if (pos < l.size() && l[pos] == ',') h.new_count = parse_number(l, ++pos);
            ++i;
            std::size_t old_seen = 0, new_seen = 0;
            while (i < lines.size() && (old_seen < h.old_count || new_seen < h.new_count)) {
                const std::string& body = lines[i];
                char tag = body.empty() ? ' ' : body[0];
                if (tag == ' ') {
                    ++old_seen;
                    ++new_seen;
                } else if (tag == '-') {
                    ++old_seen;
                } else if (tag == '+') {
                    ++new_seen;
                } else {
                    throw std::invalid_argument("unexpected line in hunk: " + body);
                }
                h.lines.push_back(body.empty() ? " " : body);
                ++i;
            }
            if (old_seen != h.old_count || new_seen != h.new_count)
                throw std::invalid_argument("truncated hunk");
            files.back().hunks.push_back(std::move(h));
            continue;
        }
        throw std::invalid_argument("unexpected line in patch: " + l);
    }
    return files;
}

std::string apply_diff(std::string_view before, const FileDiff& diff)
{
    auto lines = split_lines(before);
    std::vector<std::string> out;
    std::size_t cursor = 0;  // next unconsumed old line (0-based)
    for (const auto& h : diff.hunks) {
        std::size_t start = h.old_count > 0 ? h.old_start - 1 : h.old_start;
        if (start < cursor || start > lines.size()) throw std::runtime_error("hunk out of order in " + diff.path);
        while (cursor < start) out.push_back(lines[cursor++]);
        for (const auto& l : h.lines) {
            char tag = l[0];
            std::string body = l.substr(1);
            if (tag == '+') {
                out.push_back(body);
                continue;
            }
            if (cursor >= lines.size() || lines[cursor] != body)
                throw std::runtime_error("context mismatch in " + diff.path + " at line " + std::to_string(cursor + 1));
            ++cursor;
            if (tag == ' ') out.push_back(body);
        }
    }
    while (cursor < lines.size()) out.push_back(lines[cursor++]);
    std::string text;
    for (const auto& l : out) text += l + "\n";
    return text;
}

std::map<std::string, std::string> apply_patch(std::map<std::string, std::string> sources, std::string_view patch)
{
    for (const auto& f : parse_unified(patch)) {
        auto it = sources.find(f.path);
        if (it == sources.end()) throw std::runtime_error("patch touches unknown file " + f.path);
        it->second = apply_diff(it->second, f);
    }
    return sources;
}

}  // namespace gvr
