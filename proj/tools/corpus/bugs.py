# Copyright 2026 The gvrepair Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from lib import STATS, TEXT
B = []
def bug(name, desc, reachable, files, fixed, tests, extra=None):
    B.append(dict(name=name, desc=desc, reachable=reachable, files=files, fixed=fixed, tests=tests, extra=extra or {}))
def t(name, entry, args, expect=None, error=None):
    d = {"name": name, "entry": entry, "args": args}
    if error is not None: d["expect_error"] = error
    else: d["expect"] = expect
    return d

# ---------------- relational / logical mutation bugs
ABS = """
fn abs_value(x: int) -> int {
    let r = x;
    if (x > 0) {
        r = -x;
    }
    return r;
}
"""
bug("abs-sign", "absolute value negates positives instead of negatives", ["jmutrepair", "jgenprog", "deeprepair-lite"],
    {"main.mini": ABS}, {"main.mini": ABS.replace("x > 0", "x < 0")},
    [t("negative", "abs_value", [-3], 3), t("positive", "abs_value", [4], 4), t("zero", "abs_value", [0], 0),
     t("large_negative", "abs_value", [-250], 250)])

FMT = """
fn format_number(x: int, prev: string) -> string {
    let out = str(x);
    if (x < 0 && prev == "-") {
        out = " " + out;
    }
    return out;
}
"""
bug("sign-spacing", "number after a minus sign is not separated when it is zero", ["jmutrepair"],
    {"codegen/emit.mini": FMT}, {"codegen/emit.mini": FMT.replace("x < 0", "x <= 0")},
    [t("zero_after_minus", "format_number", [0, "-"], " 0"), t("negative_after_minus", "format_number", [-3, "-"], " -3"),
     t("positive_after_minus", "format_number", [5, "-"], "5"), t("negative_after_plus", "format_number", [-2, "+"], "-2"),
     t("zero_after_plus", "format_number", [0, "+"], "0")])

RANGE = """
fn in_range(x: int, lo: int, hi: int) -> bool {
    return x >= lo || x <= hi;
}

fn count_in_range(values: [int], lo: int, hi: int) -> int {
    let n = 0;
    let i = 0;
    while (i < values.length()) {
        if (in_range(values[i], lo, hi)) {
            n = n + 1;
        }
        i = i + 1;
    }
    return n;
}
"""
bug("range-check", "range test uses disjunction instead of conjunction", ["jmutrepair"],
    {"range.mini": RANGE}, {"range.mini": RANGE.replace("x >= lo || x <= hi", "x >= lo && x <= hi")},
    [t("inside", "in_range", [5, 1, 10], True), t("below", "in_range", [0, 1, 10], False),
     t("above", "in_range", [11, 1, 10], False), t("count", "count_in_range", [[1, 5, 20, -3, 10], 1, 10], 3)])

LOOP = """
fn sum_all(values: [int]) -> int {
    let total = 0;
    let i = 0;
    while (i <= values.length()) {
        total = total + values[i];
        i = i + 1;
    }
    return total;
}
"""
bug("loop-bound", "summation loop runs one element past the end", ["jmutrepair"],
    {"sum.mini": LOOP}, {"sum.mini": LOOP.replace("i <= values", "i < values")},
    [t("three", "sum_all", [[1, 2, 3]], 6), t("empty", "sum_all", [[]], 0), t("single", "sum_all", [[5]], 5),
     t("mixed", "sum_all", [[4, -4, 9]], 9)])

COUNT = """
fn count_of(values: [int], target: int) -> int {
    let n = 0;
    let i = 0;
    while (i < values.length()) {
        if (values[i] != target) {
            n = n + 1;
        }
        i = i + 1;
    }
    return n;
}
"""
bug("count-equal", "occurrence counter tests inequality", ["jmutrepair"],
    {"count.mini": COUNT}, {"count.mini": COUNT.replace("!= target", "== target")},
    [t("two_ones", "count_of", [[1, 2, 1], 1], 2), t("single", "count_of", [[3], 3], 1), t("empty", "count_of", [[], 4], 0),
     t("last", "count_of", [[2, 2, 5], 5], 1),
     t("all", "count_of", [[1, 1, 1], 1], 3), t("alternating", "count_of", [[4, 5, 4, 5], 4], 2), t("none", "count_of", [[7, 8, 9], 1], 0)])

DISC = """
fn discount(price: int, member: bool) -> int {
    if (!member) {
        return price - price / 10;
    }
    return price;
}
"""
bug("negated-flag", "membership discount applied to non-members", ["jmutrepair", "jgenprog", "deeprepair-lite"],
    {"shop/discount.mini": DISC}, {"shop/discount.mini": DISC.replace("!member", "member")},
    [t("member", "discount", [100, True], 90), t("guest", "discount", [100, False], 100), t("zero", "discount", [0, True], 0)])

BOUND = """
fn shipping(total: int) -> int {
    if (total > 100) {
        return 0;
    }
    return 7;
}
"""
bug("free-shipping", "free shipping threshold excludes the boundary", ["jmutrepair"],
    {"shipping.mini": BOUND}, {"shipping.mini": BOUND.replace("total > 100", "total >= 100")},
    [t("exact", "shipping", [100], 0), t("above", "shipping", [150], 0), t("below", "shipping", [99], 7), t("small", "shipping", [10], 7)])

# ---------------- suppression bugs
EXTRA = """
fn count_positive(values: [int]) -> int {
    let count = 0;
    let i = 0;
    while (i < values.length()) {
        if (values[i] > 0) {
            count = count + 1;
        }
        i = i + 1;
    }
    count = count + 1;
    return count;
}
"""
bug("extra-increment", "counter is incremented once more after the loop", ["jkali", "jgenprog", "deeprepair-lite", "tibra"],
    {"count.mini": EXTRA}, {"count.mini": EXTRA.replace("    count = count + 1;\n    return", "    return")},
    [t("mixed", "count_positive", [[1, -2, 3]], 2), t("empty", "count_positive", [[]], 0), t("zero", "count_positive", [[0, 5]], 1),
     t("negative", "count_positive", [[-1]], 0)])

WRAP = """
fn running_total(values: [int]) -> int {
    let total = 0;
    let i = 0;
    while (i < values.length()) {
        total = total + values[i];
        if (total > 100) {
            total = total - 100;
        }
        i = i + 1;
    }
    return total;
}
"""
WRAP_FIX = WRAP.replace("""        if (total > 100) {
            total = total - 100;
        }
""", "")
bug("spurious-wrap", "stale wraparound rule truncates large totals", ["jkali", "jgenprog", "deeprepair-lite", "tibra", "cardumen"],
    {"total.mini": WRAP}, {"total.mini": WRAP_FIX},
    [t("large", "running_total", [[70, 80]], 150), t("small", "running_total", [[10, 20]], 30), t("huge", "running_total", [[90, 90, 70]], 250), t("hundred", "running_total", [[60, 40, 50]], 150),
     t("empty", "running_total", [[]], 0)])

PEN = """
fn penalty(late_days: int, waived: bool) -> int {
    let p = late_days * 5;
    if (waived) {
        p = p * 2;
    }
    return p;
}
"""
bug("waived-penalty", "waived penalties are doubled instead of cancelled", ["jkali"],
    {"penalty.mini": PEN}, {"penalty.mini": PEN.replace("        p = p * 2;\n", "        return 0;\n        p = p * 2;\n")},
    [t("normal", "penalty", [3, False], 15), t("waived", "penalty", [3, True], 0), t("waived_zero", "penalty", [0, True], 0),
     t("long", "penalty", [10, False], 50)])

LABEL = """
fn label(n: int) -> string {
    let s = str(n);
    if (n > 1000) {
        s = "#" + s;
    }
    return s;
}
"""
bug("missing-prefix", "prefix is only added to large numbers", ["jkali", "jgenprog", "deeprepair-lite", "tibra"],
    {"label.mini": LABEL}, {"label.mini": LABEL.replace("n > 1000", "true")},
    [t("small", "label", [5], "#5"), t("boundary", "label", [1000], "#1000"), t("large", "label", [2000], "#2000")])

# ---------------- expression-level bugs
FRAC = """
fn fraction_tail(source: string, start_index: int, n: int) -> string {
    let end_index: int = start_index + n;
    let tail = source.substr(start_index, end_index);
    return tail;
}

fn has_slash(source: string) -> bool {
    let pos = 0;
    while (pos < source.length()) {
        if (source.substr(pos, pos + 1) == "/") {
            return true;
        }
        pos = pos + 1;
    }
    return false;
}
"""
WIDTH = """
fn width(text: string) -> int {
    return text.length();
}

fn is_blank(text: string) -> bool {
    return text == "";
}
"""
bug("fraction-tail", "end index of the parsed tail can overrun the source", ["cardumen"],
    {"parse/fraction.mini": FRAC, "text/measure.mini": WIDTH},
    {"parse/fraction.mini": FRAC.replace("start_index + n;", "source.length();")},
    [t("overrun", "fraction_tail", ["12/345", 3, 5], "345"), t("exact", "fraction_tail", ["1/2", 2, 1], "2"),
     t("long_overrun", "fraction_tail", ["10/250", 3, 10], "250"), t("slash", "has_slash", ["3/4"], True),
     t("width", "width", ["abc"], 3)])

SCORE = """
fn score(hits: int, misses: int, bonus: int) -> int {
    return hits * 2 + misses;
}

fn accuracy(hits: int, misses: int) -> int {
    return hits * 100 / (hits + misses);
}
"""
bug("wrong-operand", "score adds misses instead of the bonus", ["cardumen"],
    {"score.mini": SCORE}, {"score.mini": SCORE.replace("hits * 2 + misses", "hits * 2 + bonus")},
    [t("basic", "score", [3, 1, 5], 11), t("no_bonus", "score", [4, 2, 0], 8), t("all", "score", [1, 7, 1], 3),
     t("accuracy", "accuracy", [3, 1], 75)])

CLAMP = """
fn clamp(v: int, lo: int, hi: int) -> int {
    return max(lo, min(v, hi));
}

fn fit_width(w: int, min_w: int, max_w: int) -> int {
    return clamp(w, min_w, min_w);
}

fn fit_height(h: int, lo_h: int, hi_h: int) -> int {
    return clamp(h, lo_h, hi_h);
}
"""
bug("wrong-argument", "width clamp passes the lower bound twice", ["cardumen", "tibra", "deeprepair-lite"],
    {"layout/fit.mini": CLAMP}, {"layout/fit.mini": CLAMP.replace("clamp(w, min_w, min_w)", "clamp(w, min_w, max_w)")},
    [t("inside", "fit_width", [50, 10, 100], 50), t("below", "fit_width", [5, 10, 100], 10), t("above", "fit_width", [500, 10, 100], 100),
     t("height", "fit_height", [7, 1, 5], 5)])

# ---------------- statement-level bugs with same-name donors
MIN = """
fn min2(a: int, b: int) -> int {
    let lo = a;
    return lo;
}

fn min3(a: int, b: int, c: int) -> int {
    let lo = a;
    if (b < lo) {
        lo = b;
    }
    if (c < lo) {
        lo = c;
    }
    return lo;
}
"""
bug("min-guard", "two-argument minimum never looks at its second argument", ["jgenprog", "deeprepair-lite", "tibra"],
    {"util/minmax.mini": MIN, "lib/stats.mini": STATS},
    {"util/minmax.mini": MIN.replace("    let lo = a;\n    return lo;", "    let lo = a;\n    if (b < lo) {\n        lo = b;\n    }\n    return lo;", 1)},
    [t("first", "min2", [1, 2], 1), t("second", "min2", [5, 2], 2), t("equal", "min2", [3, 3], 3), t("three", "min3", [4, 2, 9], 2),
     t("mean", "mean", [[1, 2]], 1.5)], {"scope_experiment": True})

CAP = """
fn cap(value: int, limit: int) -> int {
    let result = value;
    return result;
}

fn cap_both(value: int, limit: int, floor: int) -> int {
    let result = value;
    if (result > limit) {
        result = limit;
    }
    if (result < floor) {
        result = floor;
    }
    return result;
}
"""
bug("cap-guard", "upper cap is never enforced", ["jgenprog", "deeprepair-lite", "tibra"],
    {"limits/cap.mini": CAP, "lib/stats.mini": STATS, "lib/text.mini": TEXT},
    {"limits/cap.mini": CAP.replace("    let result = value;\n    return result;", "    let result = value;\n    if (result > limit) {\n        result = limit;\n    }\n    return result;", 1)},
    [t("under", "cap", [5, 10], 5), t("over", "cap", [50, 10], 10), t("both", "cap_both", [-5, 10, 0], 0),
     t("spread", "spread", [[3, 9, 1]], 8)], {"scope_experiment": True})

SOLVE = """
fn solve(f: int, lo: float, hi: float) -> float {
    let a = lo;
    let b = hi;
    let i = 0;
    while (i < 40) {
        let mid = (a + b) / 2.0;
        if (mid * mid < to_float(f)) {
            a = mid;
        } else {
            b = mid;
        }
        i = i + 1;
    }
    return (a + b) / 2.0;
}

fn solve2(lo: float, hi: float) -> float {
    return solve(2, lo, hi);
}

fn solve_from(f: int, lo: float, hi: float, start: float) -> float {
    if (start < lo || start > hi) {
        return lo;
    }
    return solve(f, lo, hi);
}

fn solve_bounded(f: int, lo: float, hi: float) -> float {
    return solve2(lo, hi);
}
"""
bug("bisection-solver", "bounded solver ignores the requested function", ["jgenprog", "cardumen", "deeprepair-lite", "tibra"],
    {"analysis/solver.mini": SOLVE, "lib/stats.mini": STATS},
    {"analysis/solver.mini": SOLVE.replace("return solve2(lo, hi);", "return solve(f, lo, hi);")},
    [t("nine", "solve_bounded", [9, 0.0, 5.0], 3.0), t("two", "solve_bounded", [2, 0.0, 4.0], 1.4142135623730951),
     t("sixteen", "solve_bounded", [16, 0.0, 10.0], 4.0), t("outside", "solve_from", [4, 0.0, 3.0, 7.0], 0.0)],
    {"scope_experiment": True})

SHAPES = """
fn clamp_side(side: int) -> int {
    let s = side;
    if (s < 0) {
        s = 0;
    }
    return s;
}

fn square_area(side: int) -> int {
    let s = side;
    return s * s;
}
"""
AREA = """
fn rect_area(w: int, h: int) -> int {
    return w * h;
}

fn perimeter(w: int, h: int) -> int {
    let half = w + h;
    let p = 2 * half;
    if (p < 0) {
        p = -p;
    }
    return p;
}

fn total_area(sides: [int]) -> int {
    let total = 0;
    let i = 0;
    while (i < sides.length()) {
        total = total + sides[i] * sides[i];
        i = i + 1;
    }
    return total;
}
"""
FORMAT = """
fn describe(area: int) -> string {
    let unit = "m2";
    return str(area) + " " + unit;
}
"""
bug("two-modules", "square area does not clamp negative sides", ["jgenprog", "deeprepair-lite", "tibra"],
    {"geo/shapes.mini": SHAPES, "geo/area.mini": AREA, "util/format.mini": FORMAT, "lib/stats.mini": STATS},
    {"geo/shapes.mini": SHAPES.replace("    let s = side;\n    return s * s;", "    let s = side;\n    if (s < 0) {\n        s = 0;\n    }\n    return s * s;")},
    [t("positive", "square_area", [3], 9), t("negative", "square_area", [-4], 0), t("rect", "rect_area", [2, 5], 10),
     t("describe", "describe", [12], "12 m2")], {"scope_experiment": True})

STOCK = """
fn reserve(qty: int, available: int) -> int {
    return available - qty;
}

fn ship(qty: int, available: int) -> int {
    if (qty > available) {
        qty = available;
    }
    return available - qty;
}
"""
ORDERS = """
fn order_value(qty: int, price: int) -> int {
    let value = qty * price;
    if (value < 0) {
        value = 0;
    }
    return value;
}

fn restock(available: int, incoming: int) -> int {
    let next = available + incoming;
    return next;
}
"""
bug("inventory", "reservation can drive stock negative", ["jgenprog", "deeprepair-lite", "tibra"],
    {"store/stock.mini": STOCK, "store/orders.mini": ORDERS, "lib/stats.mini": STATS, "lib/text.mini": TEXT},
    {"store/stock.mini": STOCK.replace("fn reserve(qty: int, available: int) -> int {\n    return", "fn reserve(qty: int, available: int) -> int {\n    if (qty > available) {\n        qty = available;\n    }\n    return")},
    [t("normal", "reserve", [3, 10], 7), t("over", "reserve", [15, 10], 0), t("ship", "ship", [4, 4], 0),
     t("order", "order_value", [2, 5], 10)], {"scope_experiment": True})

WORDS = """
fn count_words(s: string) -> int {
    let count = 0;
    let in_word = false;
    let i = 0;
    while (i < s.length()) {
        let c = s.substr(i, i + 1);
        if (c == " ") {
            in_word = false;
        } else {
            if (!in_word) {
                count = count + 1;
            }
        }
        i = i + 1;
    }
    return count;
}

fn first_word_end(s: string) -> int {
    let in_word = false;
    let i = 0;
    while (i < s.length()) {
        if (s.substr(i, i + 1) != " ") {
            in_word = true;
        } else {
            if (in_word) {
                return i;
            }
        }
        i = i + 1;
    }
    return i;
}
"""
LINES = """
fn count_lines(s: string) -> int {
    let lines = 1;
    let i = 0;
    while (i < s.length()) {
        if (s.substr(i, i + 1) == ";") {
            lines = lines + 1;
        }
        i = i + 1;
    }
    return lines;
}
"""
bug("word-count", "word counter never records that it is inside a word", ["jgenprog", "deeprepair-lite", "tibra"],
    {"text/words.mini": WORDS, "text/lines.mini": LINES, "lib/text.mini": TEXT, "lib/stats.mini": STATS},
    {"text/words.mini": WORDS.replace("                count = count + 1;\n            }\n        }", "                count = count + 1;\n            }\n            in_word = true;\n        }", 1)},
    [t("two", "count_words", ["ab cd"], 2), t("spaces", "count_words", ["  x  "], 1), t("empty", "count_words", [""], 0),
     t("three", "count_words", ["a bb ccc"], 3), t("long", "count_words", ["hello world"], 2),
     t("letters", "count_words", ["a b c d"], 4), t("one", "count_words", ["aaaa"], 1), t("end", "first_word_end", ["hi there"], 2)], {"scope_experiment": True})

# ---------------- bugs needing variable renaming
DIV = """
fn ratio(num: int, den: int) -> int {
    let q = num / den;
    return q;
}

fn average(sum: int, count: int) -> int {
    if (count == 0) {
        return 0;
    }
    return sum / count;
}
"""
bug("safe-div", "ratio divides by zero instead of returning 0", ["tibra", "deeprepair-lite"],
    {"math/div.mini": DIV}, {"math/div.mini": DIV.replace("    let q = num / den;", "    if (den == 0) {\n        return 0;\n    }\n    let q = num / den;")},
    [t("normal", "ratio", [10, 2], 5), t("zero", "ratio", [10, 0], 0), t("average", "average", [9, 3], 3),
     t("average_zero", "average", [9, 0], 0)])

TOTAL = """
fn order_total(price: int, qty: int) -> int {
    let total = price * qty;
    return total;
}

fn refund_total(amount: int, items: int) -> int {
    let sum = amount * items;
    if (items < 0) {
        sum = 0;
    }
    return sum;
}
"""
bug("negative-qty", "order total goes negative for negative quantities", ["tibra", "deeprepair-lite"],
    {"billing/total.mini": TOTAL}, {"billing/total.mini": TOTAL.replace("    let total = price * qty;\n    return total;", "    let total = price * qty;\n    if (qty < 0) {\n        total = 0;\n    }\n    return total;")},
    [t("normal", "order_total", [3, 4], 12), t("negative", "order_total", [3, -2], 0), t("refund", "refund_total", [5, 2], 10),
     t("refund_negative", "refund_total", [5, -1], 0)])
