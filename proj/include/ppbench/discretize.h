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

#ifndef PPBENCH_DISCRETIZE_H_
#define PPBENCH_DISCRETIZE_H_

#include <cstddef>
#include <vector>

#include "ppbench/table.h"

namespace ppbench {

struct Discretization {
  // Numeric columns become categorical bin columns labelled "b0", "b1", ...;
  // categorical columns pass through unchanged.
  Table table;
  // bins + 1 ascending cut points per numeric column ({v, v} for a constant
  // column); empty for categorical columns.
  std::vector<std::vector<double>> edges;
  std::vector<int> cardinality;
  // Constant numeric columns collapse to a single bin. Flagged, not fatal.
  std::vector<bool> degenerate;

  bool any_degenerate() const;
};

// Equal-width bins over [min, max] of each numeric column. The last bin is
// closed on the right. Throws kInvalidArgument for bins < 2, kEmptyInput for
// an empty table.
Discretization discretize(const Table& t, int bins);

// Bin of `value` under `edges`, clamped to the outer bins.
int bin_index(double value, const std::vector<double>& edges);

}  // namespace ppbench

#endif  // PPBENCH_DISCRETIZE_H_
