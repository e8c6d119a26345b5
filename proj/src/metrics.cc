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

#include "ppbench/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ppbench/error.h"
#include "ppbench/io.h"

namespace ppbench {

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptyInput, "KS needs two non-empty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() || j < y.size()) {
    double v;
    if (i == x.size()) {
      v = y[j];
    } else if (j == y.size()) {
      v = x[i];
    } else {
      v = std::min(x[i], y[j]);
    }
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return d;
}

double ks_complement(std::span<const double> real, std::span<const double> synth) {
  return 1.0 - ks_statistic(real, synth);
}

double total_variation(const CategoryCounts& a, const CategoryCounts& b) {
  double ta = 0.0;
  double tb = 0.0;
  for (const auto& [_, c] : a) ta += c;
  for (const auto& [_, c] : b) tb += c;
  if (ta <= 0 || tb <= 0) throw Error(ErrorCode::kEmptyInput, "TVD needs two non-empty count maps");
  std::set<std::string> keys;
  for (const auto& [k, _] : a) keys.insert(k);
  for (const auto& [k, _] : b) keys.insert(k);
  double sum = 0.0;
  for (const std::string& k : keys) {
    const auto ia = a.find(k);
    const auto ib = b.find(k);
    const double pa = ia == a.end() ? 0.0 : ia->second / ta;
    const double pb = ib == b.end() ? 0.0 : ib->second / tb;
    sum += std::abs(pa - pb);
  }
  return std::min(1.0, 0.5 * sum);
}

double tvd_complement(const CategoryCounts& real, const CategoryCounts& synth) {
  return 1.0 - total_variation(real, synth);
}

CategoryCounts category_counts(const Table& t, std::size_t col) {
  const ColumnSpec& spec = t.schema().column(col);
  if (!spec.is_categorical()) {
    throw Error(ErrorCode::kInvalidArgument, "column '" + spec.name + "' is not categorical");
  }
  CategoryCounts counts;
  for (std::size_t r = 0; r < t.num_rows(); ++r) counts[spec.categories[t.category(r, col)]] += 1.0;
  return counts;
}

std::string_view to_string(MetricKind kind) {
  return kind == MetricKind::kKsComplement ? "ks_complement" : "tvd_complement";
}

std::string UtilityReport::to_csv() const {
  std::ostringstream out;
  out << "column,metric,score\n";
  for (const ColumnScore& s : per_column) {
    out << csv_escape(s.column) << ',' << to_string(s.metric) << ',' << format_double(s.score)
        << '\n';
  }
  out << "aggregate,stat_mean," << format_double(aggregate_stat) << '\n';
  if (ml_accuracy) out << "aggregate,ml_accuracy," << format_double(*ml_accuracy) << '\n';
  return out.str();
}

UtilityReport statistical_utility(const Table& seed, const Table& published) {
  require_same_schema(seed.schema(), published.schema());
  UtilityReport report;
  double total = 0.0;
  for (std::size_t c = 0; c < seed.num_columns(); ++c) {
    const ColumnSpec& spec = seed.schema().column(c);
    ColumnScore score{spec.name, MetricKind::kKsComplement, 0.0};
    if (spec.is_numeric()) {
      score.score = ks_complement(seed.column(c), published.column(c));
    } else {
      score.metric = MetricKind::kTvdComplement;
      score.score = tvd_complement(category_counts(seed, c), category_counts(published, c));
    }
    total += score.score;
    report.per_column.push_back(std::move(score));
  }
  if (report.per_column.empty()) throw Error(ErrorCode::kEmptyInput, "schema has no columns");
  report.aggregate_stat = total / static_cast<double>(report.per_column.size());
  return report;
}

double ml_utility(const Table& published, const Table& real_test, const ForestConfig& cfg) {
  require_same_schema(published.schema(), real_test.schema());
  if (published.empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet, "published table is empty");
  }
  const ForestModel model = fit_forest(published, cfg);
  const std::vector<PredictionVector> preds = predict(model, real_test);
  return accuracy(preds);
}

}  // namespace ppbench
