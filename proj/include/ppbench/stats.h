// Copyright 2026 The ppbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPBENCH_STATS_H_
#define PPBENCH_STATS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppbench/table.h"

namespace ppbench {

// Linear-interpolation quantile at rank h = (n - 1) * q of the sorted values.
// Throws kEmptyInput, kInvalidArgument for q outside [0, 1].
double quantile(std::span<const double> values, double q);

double mean(std::span<const double> values);
// Population variance (divides by n).
double variance(std::span<const double> values);
double median(std::span<const double> values);

// Per-column cap; nullopt for categorical columns.
using ColumnCaps = std::vector<std::optional<double>>;

ColumnCaps numeric_caps(const Table& t, double q);
Table apply_caps(const Table& t, const ColumnCaps& caps);
Record apply_caps(const Record& r, const ColumnCaps& caps);

// Replaces every numeric cell v by min(v, quantile(column, q)).
Table cap_numeric(const Table& t, double q);

struct OutlierEntry {
  std::size_t row = 0;
  double score = 0.0;
};

struct OutlierCatalog {
  // Sorted by descending score; equal scores keep ascending row order.
  std::vector<OutlierEntry> entries;
  std::vector<std::string> scored_columns;
};

// Scores each row by the sum of its z-scores over the outlier-scored columns
// and returns the top_n rows. Throws kNoScoredColumns, kDegenerateColumn.
OutlierCatalog find_outliers(const Table& t, std::size_t top_n);

}  // namespace ppbench

#endif  // PPBENCH_STATS_H_
