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

"""Compares a bench.csv against the `reachable` labels in corpus/*/meta.json.

usage: python3 tools/corpus/check_labels.py bench.csv

A label must hold on every seed and an unlabelled preset must never repair
the bug; offending rows are marked with <<<. Exit status 1 on any mismatch.
"""
import collections
import csv
import json
import os
import sys

REPO = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
MODES = ["jgenprog", "jkali", "jmutrepair", "deeprepair-lite", "cardumen", "tibra"]


def main():
    rows = list(csv.DictReader(open(sys.argv[1])))
    runs = collections.defaultdict(list)
    for r in rows:
        runs[(r["bug"], r["mode"])].append(r["repaired"] == "true")
    failed = False
    for bug in sorted({r["bug"] for r in rows}):
        labels = json.load(open(os.path.join(REPO, "corpus", bug, "meta.json")))["reachable"]
        cells, bad = [], False
        for m in MODES:
            v = runs[(bug, m)]
            n = sum(v)
            cell = ("L" if m in labels else "-") + str(n)
            if (m in labels) != (n == len(v)) or (m not in labels and n):
                cell += "!"
                bad = True
            cells.append(f"{m[:6]}:{cell}")
        failed = failed or bad
        print(f"{bug:18}", " ".join(cells), "<<<" if bad else "")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
