#!/usr/bin/env python3
# Copyright 2026 The ppbench Authors
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
"""Writes the synthetic hospital-discharge desk corpus and its schema.

Rows are drawn from a small hand-written generative model; the last few rows
are planted extreme-charge patients.
"""

import argparse
import csv
import json
import pathlib

import numpy as np

SEX = ["F", "M"]
RACE = ["white", "black", "asian", "other", "pacific"]
ETHNICITY = ["non-hispanic", "hispanic"]
ADMISSION = ["emergency", "urgent", "elective", "newborn"]
RISK = ["minor", "moderate", "major", "extreme"]


def schema():
    return {
        "columns": [
            {"name": "age_band", "kind": "numeric", "roles": ["qid"]},
            {"name": "sex", "kind": "categorical", "roles": ["qid"], "categories": SEX},
            {"name": "race", "kind": "categorical", "roles": ["qid"], "categories": RACE},
            {"name": "ethnicity", "kind": "categorical", "roles": ["qid"],
             "categories": ETHNICITY},
            {"name": "admission_type", "kind": "categorical", "roles": [],
             "categories": ADMISSION},
            {"name": "length_of_stay", "kind": "numeric", "roles": []},
            {"name": "charges_accommodation", "kind": "numeric", "roles": ["outlier_scored"]},
            {"name": "charges_ancillary", "kind": "numeric", "roles": ["outlier_scored"]},
            {"name": "total_charges", "kind": "numeric", "roles": ["outlier_scored"]},
            {"name": "risk_mortality", "kind": "categorical", "roles": ["target"],
             "categories": RISK},
        ]
    }


def draw(rng, n):
    age = rng.choice(np.arange(1, 9), size=n, p=[.06, .08, .12, .14, .16, .17, .15, .12])
    sex = rng.integers(0, 2, size=n)
    race = rng.choice(5, size=n, p=[.62, .18, .1, .095, .005])
    eth = (rng.random(n) < np.where(race == 3, 0.45, 0.12)).astype(int)
    adm = np.where(age == 1, 3, rng.choice(3, size=n, p=[.55, .2, .25]))
    los = np.maximum(1, np.round(rng.gamma(1.5 + 0.25 * age, 1.6)
                                 * np.where(adm == 0, 1.4, 1.0))).astype(int)
    acc = np.round(los * rng.normal(1800, 250, size=n).clip(600), 2)
    anc = np.round(los * rng.gamma(2.0, 450, size=n) * (1 + 0.4 * (adm == 0)), 2)
    total = np.round(acc + anc, 2)
    score = 0.35 * age + 0.18 * los + 0.6 * (adm == 0) + rng.normal(0, 0.9, size=n)
    risk = np.digitize(score, [2.6, 3.9, 5.0])
    return age, sex, race, eth, adm, los, acc, anc, total, risk


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=5000)
    parser.add_argument("--outliers", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20260101)
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("data"))
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    cols = draw(rng, args.rows + args.outliers)
    age, sex, race, eth, adm, los, acc, anc, total, risk = cols
    for j in range(args.outliers):
        i = args.rows + j
        los[i] = 60 + 15 * j
        acc[i] = round(float(los[i] * (4000 + 300 * j)), 2)
        anc[i] = round(float(150000 + 40000 * j), 2)
        total[i] = round(float(acc[i] + anc[i]), 2)
        risk[i] = 3

    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "desk_corpus.schema.json").write_text(json.dumps(schema(), indent=2) + "\n")
    with open(args.out_dir / "desk_corpus.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow([c["name"] for c in schema()["columns"]])
        for i in range(len(age)):
            w.writerow([int(age[i]), SEX[sex[i]], RACE[race[i]], ETHNICITY[eth[i]],
                        ADMISSION[adm[i]], int(los[i]), f"{acc[i]:.2f}", f"{anc[i]:.2f}",
                        f"{total[i]:.2f}", RISK[risk[i]]])


if __name__ == "__main__":
    main()
