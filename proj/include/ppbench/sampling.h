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

#ifndef PPBENCH_SAMPLING_H_
#define PPBENCH_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ppbench/table.h"

namespace ppbench {

struct SamplePlan {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  // Categorical column whose class proportions are preserved.
  std::optional<std::string> stratify_on;
  std::set<std::size_t> disjoint_from;
};

struct Sample {
  Table table;
  // Source row index of every sampled row, in output order.
  std::vector<std::size_t> indices;
};

// Sampling without replacement. Stratified plans allocate per-class sizes by
// largest remainder (ties to the lower class index) so every class lands
// within one row of its proportional share. Throws kInsufficientRows.
Sample sample(const Table& t, const SamplePlan& plan);

// Index-only variant over the row range [0, n).
std::vector<std::size_t> sample_indices(std::size_t n, const SamplePlan& plan,
                                        const Table* strata_source = nullptr);

// Per-class allocation used by stratified sampling.
std::vector<std::size_t> largest_remainder_allocation(const std::vector<std::size_t>& counts,
                                                      std::size_t size);

}  // namespace ppbench

#endif  // PPBENCH_SAMPLING_H_
