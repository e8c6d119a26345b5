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

#include "ppbench/features.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppbench/discretize.h"
#include "ppbench/error.h"
#include "ppbench/stats.h"

namespace ppbench {

std::string_view to_string(FeatureSetKind kind) {
  switch (kind) {
    case FeatureSetKind::kHistograms: return "histograms";
    case FeatureSetKind::kPairwiseCorrelations: return "correlations";
    case FeatureSetKind::kSummaryStats: return "summary";
  }
  return "";
}

FeatureSetKind parse_feature_set(std::string_view name) {
  if (name == "histograms" || name == "histogram") return FeatureSetKind::kHistograms;
  if (name == "correlations" || name == "correlation") return FeatureSetKind::kPairwiseCorrelations;
  if (name == "summary" || name == "summary_stats") return FeatureSetKind::kSummaryStats;
  throw Error(ErrorCode::kConfig, "unknown feature set '" + std::string(name) + "'");
}

ReferenceRanges ReferenceRanges::from_population(const Table& population, int bins,
                                                 std::span<const Record> extra) {
  if (bins < 1) throw Error(ErrorCode::kInvalidArgument, "bins must be >= 1");
  if (population.empty() && extra.empty()) {
    throw Error(ErrorCode::kEmptyInput, "reference ranges need data");
  }
  ReferenceRanges ranges;
  ranges.schema = population.schema();
  ranges.numeric_edges.resize(population.num_columns());
  for (std::size_t c = 0; c < population.num_columns(); ++c) {
    if (!population.schema().column(c).is_numeric()) continue;
    std::vector<double> values(population.column(c).begin(), population.column(c).end());
    for (const Record& r : extra) values.push_back(r.at(c));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    std::vector<double>& edges = ranges.numeric_edges[c];
    if (*lo == *hi) {
      edges = {*lo, *hi};
      continue;
    }
    const double width = (*hi - *lo) / bins;
    for (int i = 0; i < bins; ++i) edges.push_back(*lo + width * i);
    edges.push_back(*hi);
  }
  return ranges;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "length mismatch");
  if (a.size() < 2) return 0.0;
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

FeatureVector extract_features(const Table& t, FeatureSetKind kind,
                               const ReferenceRanges& ranges) {
  require_same_schema(ranges.schema, t.schema());
  const Schema& schema = t.schema();
  FeatureVector out;
  switch (kind) {
    case FeatureSetKind::kHistograms:
      for (std::size_t c = 0; c < schema.size(); ++c) {
        const ColumnSpec& spec = schema.column(c);
        if (spec.is_categorical()) {
          std::vector<double> counts(spec.categories.size(), 0.0);
          for (std::size_t r = 0; r < t.num_rows(); ++r) counts[t.category(r, c)] += 1.0;
          out.values.insert(out.values.end(), counts.begin(), counts.end());
          continue;
        }
        const std::vector<double>& edges = ranges.numeric_edges[c];
        std::vector<double> counts(edges.size() - 1, 0.0);
        for (double v : t.column(c)) {
          if (v < edges.front() || v > edges.back()) out.range_mismatch = true;
          counts[static_cast<std::size_t>(bin_index(v, edges))] += 1.0;
        }
        out.values.insert(out.values.end(), counts.begin(), counts.end());
      }
      break;
    case FeatureSetKind::kPairwiseCorrelations:
      for (std::size_t i = 0; i < schema.size(); ++i) {
        for (std::size_t j = i + 1; j < schema.size(); ++j) {
          out.values.push_back(pearson(t.column(i), t.column(j)));
        }
      }
      break;
    case FeatureSetKind::kSummaryStats:
      for (std::size_t c = 0; c < schema.size(); ++c) {
        const ColumnSpec& spec = schema.column(c);
        if (spec.is_numeric()) {
          if (t.empty()) {
            out.values.insert(out.values.end(), {0.0, 0.0, 0.0});
          } else {
            out.values.push_back(mean(t.column(c)));
            out.values.push_back(median(t.column(c)));
            out.values.push_back(variance(t.column(c)));
          }
          continue;
        }
        std::vector<std::size_t> counts(spec.categories.size(), 0);
        for (std::size_t r = 0; r < t.num_rows(); ++r) ++counts[t.category(r, c)];
        double distinct = 0.0;
        int most = -1;
        int least = -1;
        for (std::size_t k = 0; k < counts.size(); ++k) {
          if (counts[k] == 0) continue;
          distinct += 1.0;
          if (most < 0 || counts[k] > counts[most]) most = static_cast<int>(k);
          if (least < 0 || counts[k] < counts[least]) least = static_cast<int>(k);
        }
        out.values.push_back(distinct);
        out.values.push_back(most);
        out.values.push_back(least);
      }
      break;
  }
  return out;
}

}  // namespace ppbench
