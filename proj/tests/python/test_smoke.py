# Copyright 2026 The ppbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
from pathlib import Path

import pytest

import ppbench

SOURCE = Path(os.environ.get("PPBENCH_SOURCE_DIR", Path(__file__).resolve().parents[2]))
FIXTURES = SOURCE / "tests" / "fixtures"
DESK_CSV = SOURCE / "data" / "desk_corpus.csv"
DESK_SCHEMA = SOURCE / "data" / "desk_corpus.schema.json"


@pytest.fixture(scope="module")
def desk():
    return ppbench.load_table(str(DESK_CSV), str(DESK_SCHEMA))


def test_load_table(desk):
    assert len(desk) == 5005
    assert "total_charges" in desk.column_names
    assert len(desk.column("total_charges")) == len(desk)


def test_metrics_exact():
    assert ppbench.ks_statistic([1.0, 2.0], [1.0, 3.0]) == pytest.approx(0.5, abs=1e-12)
    assert ppbench.total_variation({"a": 1.0}, {"a": 2.0}) == 0.0
    assert ppbench.total_variation({"a": 1.0}, {"b": 1.0}) == 1.0


def test_nhs_sanitize_is_k_anonymous():
    table = ppbench.load_table(str(FIXTURES / "kanon_ok.csv"), str(FIXTURES / "kanon.schema.json"))
    out, log = ppbench.nhs_sanitize(table, 3)
    assert ppbench.is_k_anonymous(out, 3)
    assert log["input_rows"] == 8
    assert not ppbench.is_k_anonymous(table, 4)


def test_synthesize_and_utility(desk):
    synth = ppbench.synthesize(desk, "baynet", bins=5, seed=7, n_out=500)
    assert len(synth) == 500
    assert synth.column_names == desk.column_names
    again = ppbench.synthesize(desk, "baynet", bins=5, seed=7, n_out=500)
    assert synth == again
    aggregate, per_column = ppbench.statistical_utility(desk, synth)
    assert 0.0 <= aggregate <= 1.0
    assert set(per_column) == set(desk.column_names)


def test_find_outliers(desk):
    outliers = ppbench.find_outliers(desk, 5)
    assert len(outliers) == 5


def test_laplace_samples():
    xs = ppbench.laplace_samples(1.0, 1000, 3)
    assert len(xs) == 1000


def test_bad_input_raises():
    with pytest.raises(ppbench.PpbenchError):
        ppbench.load_table("/nonexistent.csv", str(DESK_SCHEMA))


def test_run_experiment_and_tradeoff(tmp_path):
    csv_text = ppbench.run_experiment(str(FIXTURES / "smoke_config.json"), str(tmp_path))
    assert csv_text.startswith("method,parameter,stat_utility")
    assert (tmp_path / "results.csv").read_text() == csv_text
    written = json.loads((tmp_path / "tradeoff.json").read_text())
    assert written == ppbench.tradeoff(csv_text)
    assert {s["method"] for s in written["series"]} == {"k-anon", "BayNet"}
