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

#ifndef PPBENCH_METRICS_H_
#define PPBENCH_METRICS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppbench/forest.h"
#include "ppbench/table.h"

namespace ppbench {

// Two-sample Kolmogorov-Smirnov statistic: sup |F_n(x) - G_m(x)| over the
// union of sample points, with ties resolved exactly. Throws kEmptyInput.
double ks_statistic(std::span<const double> a, std::span<const double> b);
double ks_complement(std::span<const double> real, std::span<const double> synth);

using CategoryCounts = std::map<std::string, double>;

// Total variation distance between the normalized count maps; categories
// missing from one side count as zero. Throws kEmptyInput.
double total_variation(const CategoryCounts& a, const CategoryCounts& b);
double tvd_complement(const CategoryCounts& real, const CategoryCounts& synth);

CategoryCounts category_counts(const Table& t, std::size_t col);

enum class MetricKind { kKsComplement, kTvdComplement };
std::string_view to_string(MetricKind kind);

struct ColumnScore {
  std::string column;
  MetricKind metric;
  double score = 0.0;
};

struct UtilityReport {
  std::vector<ColumnScore> per_column;
  double aggregate_stat = 0.0;  // unweighted mean of per_column scores
  std::optional<double> ml_accuracy;

  // "column,metric,score" rows followed by a summary line.
  std::string to_csv() const;
};

// KS complement for numeric columns, TVD complement for categorical columns.
// Throws kSchemaMismatch, kEmptyInput.
UtilityReport statistical_utility(const Table& seed, const Table& published);

// Train a forest on `published`, score it on `real_test`. Throws
// kEmptyTrainingSet when nothing was published.
double ml_utility(const Table& published, const Table& real_test, const ForestConfig& cfg);

}  // namespace ppbench

#endif  // PPBENCH_METRICS_H_
