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

#include "ppbench/diagnostic.h"

#include <cmath>

#include "ppbench/error.h"
#include "ppbench/metrics.h"
#include "ppbench/stats.h"

namespace ppbench {

nlohmann::json DiagnosticReport::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const ColumnDivergence& c : columns) {
    cols.push_back({{"column", c.column},
                    {"kind", std::string(to_string(c.kind))},
                    {"statistic", c.statistic},
                    {"mean_shift", c.mean_shift},
                    {"flagged", c.flagged}});
  }
  return {{"threshold", threshold}, {"flag", flag}, {"columns", cols}};
}

DiagnosticReport precondition_diagnostic(std::span<const Table> member_seeds,
                                         std::span<const Table> non_member_seeds,
                                         double threshold) {
  if (member_seeds.empty() || non_member_seeds.empty()) {
    throw Error(ErrorCode::kEmptyInput, "both seed pools must be non-empty");
  }
  const Table members = Table::concatenate(member_seeds);
  const Table non_members = Table::concatenate(non_member_seeds);
  require_same_schema(members.schema(), non_members.schema());
  if (members.empty() || non_members.empty()) {
    throw Error(ErrorCode::kEmptyInput, "seed pools hold no rows");
  }

  DiagnosticReport report;
  report.threshold = threshold;
  for (std::size_t c = 0; c < members.num_columns(); ++c) {
    const ColumnSpec& spec = members.schema().column(c);
    ColumnDivergence d;
    d.column = spec.name;
    d.kind = spec.kind;
    if (spec.is_numeric()) {
      d.statistic = ks_statistic(members.column(c), non_members.column(c));
      const double pooled =
          std::sqrt((variance(members.column(c)) + variance(non_members.column(c))) / 2.0);
      const double diff = std::abs(mean(members.column(c)) - mean(non_members.column(c)));
      d.mean_shift = pooled > 0.0 ? diff / pooled : 0.0;
    } else {
      d.statistic = total_variation(category_counts(members, c), category_counts(non_members, c));
    }
    d.flagged = d.statistic > threshold || d.mean_shift > threshold;
    report.flag = report.flag || d.flagged;
    report.columns.push_back(std::move(d));
  }
  return report;
}

}  // namespace ppbench
