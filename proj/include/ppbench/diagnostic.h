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

#ifndef PPBENCH_DIAGNOSTIC_H_
#define PPBENCH_DIAGNOSTIC_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppbench/table.h"

namespace ppbench {

struct ColumnDivergence {
  std::string column;
  ColumnKind kind = ColumnKind::kNumeric;
  // KS statistic for numeric columns, TVD for categorical columns.
  double statistic = 0.0;
  // Numeric columns: |mean_a - mean_b| / sqrt((var_a + var_b) / 2), 0 when
  // both pools are constant. Catches a single extreme value that barely
  // moves the empirical CDF.
  double mean_shift = 0.0;
  bool flagged = false;
};

struct DiagnosticReport {
  std::vector<ColumnDivergence> columns;
  double threshold = 0.2;
  // Some column diverges: member and non-member seeds do not share one
  // distribution, so DP-derived bounds on attacker advantage do not apply.
  bool flag = false;

  nlohmann::json to_json() const;
};

// Compares the pooled member seeds with the pooled non-member seeds column by
// column. Throws kEmptyInput, kSchemaMismatch.
DiagnosticReport precondition_diagnostic(std::span<const Table> member_seeds,
                                         std::span<const Table> non_member_seeds,
                                         double threshold = 0.2);

}  // namespace ppbench

#endif  // PPBENCH_DIAGNOSTIC_H_
