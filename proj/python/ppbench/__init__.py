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
"""Privacy-utility benchmark for tabular data release."""

from ppbench._ppbench import (
    PpbenchError,
    Table,
    find_outliers,
    is_k_anonymous,
    ks_statistic,
    laplace_samples,
    load_table,
    ml_utility,
    nhs_sanitize,
    run_experiment,
    statistical_utility,
    synthesize,
    table_from_csv,
    total_variation,
    tradeoff,
)

__all__ = [
    "PpbenchError",
    "Table",
    "find_outliers",
    "is_k_anonymous",
    "ks_statistic",
    "laplace_samples",
    "load_table",
    "ml_utility",
    "nhs_sanitize",
    "run_experiment",
    "statistical_utility",
    "synthesize",
    "table_from_csv",
    "total_variation",
    "tradeoff",
]
