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

"""Writes corpus/ from the bug definitions in bugs.py.

usage: python3 tools/corpus/gen.py [path/to/gvrepair]

Sources are passed through `gvrepair format` so they are canonical, and
expected_fix.patch is the diff between the canonical buggy and fixed files.
"""
import difflib
import json
import os
import shutil
import subprocess
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from bugs import B

REPO = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
ROOT = os.path.join(REPO, "corpus")
FMT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(REPO, "build", "tools", "gvrepair")


def canon(text, path):
    with open(path, "w") as f:
        f.write(text.lstrip("\n"))
    subprocess.run([FMT, "format", "-i", path], check=True)
    return open(path).read()


def main():
    scratch = tempfile.mkdtemp()
    for b in B:
        d = os.path.join(ROOT, b["name"])
        if os.path.exists(d):
            shutil.rmtree(d)
        patch = []
        for path, text in sorted(b["files"].items()):
            p = os.path.join(d, "src", path)
            os.makedirs(os.path.dirname(p), exist_ok=True)
            buggy = canon(text, p)
            if path in b["fixed"]:
                fixed = canon(b["fixed"][path], os.path.join(scratch, "fixed.mini"))
                assert fixed != buggy, b["name"]
                patch += difflib.unified_diff(buggy.splitlines(True), fixed.splitlines(True),
                                              "a/" + path, "b/" + path, n=3)
        for path in b["fixed"]:
            assert path in b["files"]
        with open(os.path.join(d, "expected_fix.patch"), "w") as f:
            f.write("".join(patch))
        with open(os.path.join(d, "tests.json"), "w") as f:
            f.write("[\n" + ",\n".join("  " + json.dumps(x) for x in b["tests"]) + "\n]\n")
        meta = {"bug": b["name"], "description": b["desc"], "reachable": b["reachable"]}
        meta.update(b["extra"])
        with open(os.path.join(d, "meta.json"), "w") as f:
            f.write(json.dumps(meta, indent=2) + "\n")
    shutil.rmtree(scratch)
    print(len(B), "bugs")


if __name__ == "__main__":
    main()
