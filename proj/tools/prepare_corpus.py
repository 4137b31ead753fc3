#!/usr/bin/env python3
# Copyright 2026 The textnet Authors.
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
"""Builds data/corpus/ from the public-domain texts in @stdlib/datasets.

Usage:
  npm pack @stdlib/datasets@0.4.0 && tar xzf stdlib-datasets-0.4.0.tgz
  python3 tools/prepare_corpus.py package data/corpus

Selection rules (deterministic, independent of any classifier result):
  authorship/  the four presidents with at least five State of the Union
               addresses whose fifth-longest address is longest; their five
               longest addresses each.
  variability/ Moby Dick plus the eleven presidents with the largest total
               word count, each president's addresses joined in year order.
"""

import collections
import csv
import pathlib
import re
import sys

NAME_RE = re.compile(r"^(\d{4})_(.+)_([a-z]+)\.txt$")


def president_title(slug):
    parts = slug.split("_")
    return " ".join(p.capitalize() if len(p) > 1 else p.upper() + "." for p in parts)


def main(src, dst):
    src = pathlib.Path(src)
    dst = pathlib.Path(dst)
    speeches = collections.defaultdict(list)
    for path in sorted((src / "sotu" / "data").glob("*.txt")):
        m = NAME_RE.match(path.name)
        if not m:
            continue
        text = path.read_text(encoding="utf-8")
        speeches[m.group(2)].append((int(m.group(1)), len(text.split()), path.name, text))

    # authorship corpus
    eligible = {k: v for k, v in speeches.items() if len(v) >= 5}
    fifth = {k: sorted((s[1] for s in v), reverse=True)[4] for k, v in eligible.items()}
    authors = sorted(fifth, key=lambda k: (-fifth[k], k))[:4]
    (dst / "authorship").mkdir(parents=True, exist_ok=True)
    rows = []
    for slug in authors:
        chosen = sorted(eligible[slug], key=lambda s: (-s[1], s[0]))[:5]
        for year, _, name, text in sorted(chosen):
            out = dst / "authorship" / name
            out.write_text(text, encoding="utf-8")
            rows.append((president_title(slug), f"State of the Union {year}", year,
                         f"authorship/{name}"))
    with open(dst / "authorship.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["author", "title", "year", "path"])
        w.writerows(rows)

    # variability corpus
    totals = {k: sum(s[1] for s in v) for k, v in speeches.items()}
    long_form = sorted(totals, key=lambda k: (-totals[k], k))[:11]
    (dst / "variability").mkdir(parents=True, exist_ok=True)
    rows = []
    moby = (src / "moby-dick" / "data" / "data.txt").read_text(encoding="utf-8")
    (dst / "variability" / "moby_dick.txt").write_text(moby, encoding="utf-8")
    rows.append(("Herman Melville", "Moby Dick", 1851, "variability/moby_dick.txt"))
    for slug in long_form:
        parts = sorted(speeches[slug])
        text = "\n\n".join(p[3].strip() for p in parts) + "\n"
        name = f"{slug}.txt"
        (dst / "variability" / name).write_text(text, encoding="utf-8")
        rows.append((president_title(slug), "State of the Union addresses", parts[0][0],
                     f"variability/{name}"))
    with open(dst / "variability.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["author", "title", "year", "path"])
        w.writerows(rows)


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
