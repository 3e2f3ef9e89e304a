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

# shared filler module for scope-experiment bugs
STATS = """
fn mean(values: [int]) -> float {
    if (values.length() == 0) {
        return 0.0;
    }
    let total = 0;
    let i = 0;
    while (i < values.length()) {
        total = total + values[i];
        i = i + 1;
    }
    return to_float(total) / to_float(values.length());
}

fn largest(values: [int]) -> int {
    let best = values[0];
    let i = 1;
    while (i < values.length()) {
        best = max(best, values[i]);
        i = i + 1;
    }
    return best;
}

fn smallest(values: [int]) -> int {
    let best = values[0];
    let i = 1;
    while (i < values.length()) {
        best = min(best, values[i]);
        i = i + 1;
    }
    return best;
}

fn spread(values: [int]) -> int {
    let hi = largest(values);
    let lo = smallest(values);
    return hi - lo;
}

fn histogram(values: [int], buckets: int) -> [int] {
    let counts: [int] = [];
    let b = 0;
    while (b < buckets) {
        counts = counts.append(0);
        b = b + 1;
    }
    let i = 0;
    while (i < values.length()) {
        let slot = abs(values[i]) % buckets;
        counts[slot] = counts[slot] + 1;
        i = i + 1;
    }
    return counts;
}
"""

TEXT = """
fn repeat(s: string, times: int) -> string {
    let out = "";
    let k = 0;
    while (k < times) {
        out = out + s;
        k = k + 1;
    }
    return out;
}

fn pad_left(s: string, width: int) -> string {
    let out = s;
    while (out.length() < width) {
        out = " " + out;
    }
    return out;
}

fn count_char(s: string, c: string) -> int {
    let n = 0;
    let j = 0;
    while (j < s.length()) {
        if (s.substr(j, j + 1) == c) {
            n = n + 1;
        }
        j = j + 1;
    }
    return n;
}

fn join_all(parts: [string], sep: string) -> string {
    let out = "";
    let j = 0;
    while (j < parts.length()) {
        if (j > 0) {
            out = out + sep;
        }
        out = out + parts[j];
        j = j + 1;
    }
    return out;
}
"""
