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

#include "ppbench/discretize.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppbench/error.h"

namespace ppbench {

bool Discretization::any_degenerate() const {
  return std::any_of(degenerate.begin(), degenerate.end(), [](bool d) { return d; });
}

int bin_index(double value, const std::vector<double>& edges) {
  const int bins = static_cast<int>(edges.size()) - 1;
  if (bins <= 1 || edges.front() == edges.back()) return 0;
  const double lo = edges.front();
  const double width = (edges.back() - lo) / bins;
  const int b = static_cast<int>(std::floor((value - lo) / width));
  return std::clamp(b, 0, bins - 1);
}

Discretization discretize(const Table& t, int bins) {
  if (bins < 2) throw Error(ErrorCode::kInvalidArgument, "bins must be >= 2");
  if (t.empty()) throw Error(ErrorCode::kEmptyInput, "cannot discretize an empty table");
  const Schema& schema = t.schema();
  const std::size_t m = schema.size();

  Discretization out;
  out.edges.resize(m);
  out.cardinality.resize(m);
  out.degenerate.assign(m, false);
  std::vector<ColumnSpec> specs;
  std::vector<std::vector<Cell>> columns(m);
  for (std::size_t c = 0; c < m; ++c) {
    const ColumnSpec& spec = schema.column(c);
    if (spec.is_categorical()) {
      specs.push_back(spec);
      columns[c].assign(t.column(c).begin(), t.column(c).end());
      out.cardinality[c] = static_cast<int>(spec.categories.size());
      continue;
    }
    const auto [lo_it, hi_it] = std::minmax_element(t.column(c).begin(), t.column(c).end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double>& edges = out.edges[c];
    if (lo == hi) {
      out.degenerate[c] = true;
      edges = {lo, hi};
    } else {
      const double width = (hi - lo) / bins;
      for (int i = 0; i < bins; ++i) edges.push_back(lo + width * i);
      edges.push_back(hi);
    }
    const int card = static_cast<int>(edges.size()) - 1;
    out.cardinality[c] = card;

    ColumnSpec binned;
    binned.name = spec.name;
    binned.kind = ColumnKind::kCategorical;
    binned.roles = spec.roles;
    binned.roles.erase(Role::kOutlierScored);
    for (int i = 0; i < card; ++i) binned.categories.push_back("b" + std::to_string(i));
    specs.push_back(std::move(binned));

    columns[c].reserve(t.num_rows());
    for (double v : t.column(c)) columns[c].push_back(bin_index(v, edges));
  }
  out.table = Table(Schema(std::move(specs)), std::move(columns));
  return out;
}

}  // namespace ppbench
