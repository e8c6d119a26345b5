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

#include "ppbench/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppbench/error.h"

namespace ppbench {

double quantile(std::span<const double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "quantile of empty input");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "quantile fraction outside [0, 1]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double mean(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "mean of empty input");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
  const double mu = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  return ss / static_cast<double>(values.size());
}

double median(std::span<const double> values) { return quantile(values, 0.5); }

ColumnCaps numeric_caps(const Table& t, double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "cap quantile outside (0, 1]");
  }
  ColumnCaps caps(t.num_columns());
  for (std::size_t c = 0; c < t.num_columns(); ++c) {
    if (t.schema().column(c).is_numeric()) caps[c] = quantile(t.column(c), q);
  }
  return caps;
}

Table apply_caps(const Table& t, const ColumnCaps& caps) {
  Table out = t;
  for (std::size_t c = 0; c < t.num_columns(); ++c) {
    if (!caps.at(c)) continue;
    std::vector<double> col(t.column(c).begin(), t.column(c).end());
    for (double& v : col) v = std::min(v, *caps[c]);
    out = out.with_column(c, std::move(col));
  }
  return out;
}

Record apply_caps(const Record& r, const ColumnCaps& caps) {
  Record out = r;
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (caps.at(c)) out[c] = std::min(out[c], *caps[c]);
  }
  return out;
}

Table cap_numeric(const Table& t, double q) {
  if (t.empty() && !t.schema().indices_of(ColumnKind::kNumeric).empty()) {
    throw Error(ErrorCode::kEmptyInput, "cannot cap an empty table");
  }
  return apply_caps(t, numeric_caps(t, q));
}

OutlierCatalog find_outliers(const Table& t, std::size_t top_n) {
  const std::vector<std::size_t> scored = t.schema().indices_with(Role::kOutlierScored);
  if (scored.empty()) {
    throw Error(ErrorCode::kNoScoredColumns, "no column has role outlier_scored");
  }
  if (t.empty()) throw Error(ErrorCode::kEmptyInput, "cannot score an empty table");

  OutlierCatalog catalog;
  std::vector<double> score(t.num_rows(), 0.0);
  for (std::size_t c : scored) {
    const double mu = mean(t.column(c));
    const double sd = std::sqrt(variance(t.column(c)));
    if (sd == 0.0) {
      throw Error(ErrorCode::kDegenerateColumn,
                  "column '" + t.schema().column(c).name + "' has zero variance");
    }
    for (std::size_t r = 0; r < t.num_rows(); ++r) score[r] += (t.at(r, c) - mu) / sd;
    catalog.scored_columns.push_back(t.schema().column(c).name);
  }
  std::vector<std::size_t> order(t.num_rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  order.resize(std::min(top_n, order.size()));
  for (std::size_t r : order) catalog.entries.push_back({r, score[r]});
  return catalog;
}

}  // namespace ppbench
