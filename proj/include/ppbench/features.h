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

#ifndef PPBENCH_FEATURES_H_
#define PPBENCH_FEATURES_H_

#include <span>
#include <string_view>
#include <vector>

#include "ppbench/table.h"

namespace ppbench {

enum class FeatureSetKind { kHistograms, kPairwiseCorrelations, kSummaryStats };

std::string_view to_string(FeatureSetKind kind);
FeatureSetKind parse_feature_set(std::string_view name);

// Bin edges shared by every dataset an attacker looks at. Built once, before
// any shadow dataset exists.
struct ReferenceRanges {
  Schema schema;
  // Equal-width edges per numeric column; empty for categorical columns.
  std::vector<std::vector<double>> numeric_edges;

  // `bins` bins over [min, max] of the population plus any extra records.
  static ReferenceRanges from_population(const Table& population, int bins = 10,
                                         std::span<const Record> extra = {});
};

struct FeatureVector {
  std::vector<double> values;
  // A numeric value fell outside the reference range and was clamped into
  // the edge bin.
  bool range_mismatch = false;
};

// Histograms: per-column bin counts, concatenated.
// PairwiseCorrelations: Pearson r over label-encoded columns, upper triangle
// (0 where a column is constant).
// SummaryStats: mean/median/variance per numeric column; distinct count,
// most- and least-frequent category per categorical column.
FeatureVector extract_features(const Table& t, FeatureSetKind kind,
                               const ReferenceRanges& ranges);

double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace ppbench

#endif  // PPBENCH_FEATURES_H_
