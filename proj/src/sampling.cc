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

#include "ppbench/sampling.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ppbench/error.h"
#include "ppbench/random.h"

namespace ppbench {
namespace {

// Draws `k` items from `pool` without replacement (partial Fisher-Yates).
std::vector<std::size_t> draw(std::vector<std::size_t> pool, std::size_t k, Rng& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace

std::vector<std::size_t> largest_remainder_allocation(const std::vector<std::size_t>& counts,
                                                      std::size_t size) {
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  std::vector<std::size_t> alloc(counts.size(), 0);
  if (total == 0) return alloc;
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double exact = static_cast<double>(size) * static_cast<double>(counts[i]) /
                         static_cast<double>(total);
    alloc[i] = static_cast<std::size_t>(exact);
    assigned += alloc[i];
    remainders.emplace_back(exact - static_cast<double>(alloc[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t j = 0; assigned < size && j < remainders.size(); ++j) {
    const std::size_t i = remainders[j].second;
    if (alloc[i] < counts[i]) {
      ++alloc[i];
      ++assigned;
    }
  }
  return alloc;
}

std::vector<std::size_t> sample_indices(std::size_t n, const SamplePlan& plan,
                                        const Table* strata_source) {
  if (plan.size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sample size must be positive");
  }
  std::vector<std::size_t> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!plan.disjoint_from.count(i)) candidates.push_back(i);
  }
  if (plan.size > candidates.size()) {
    throw Error(ErrorCode::kInsufficientRows,
                "requested " + std::to_string(plan.size) + " rows, " +
                    std::to_string(candidates.size()) + " available");
  }
  Rng rng(plan.seed);
  if (!plan.stratify_on) return draw(std::move(candidates), plan.size, rng);

  if (strata_source == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "stratified sampling needs a table");
  }
  const std::size_t col = strata_source->schema().require(*plan.stratify_on);
  const ColumnSpec& spec = strata_source->schema().column(col);
  if (!spec.is_categorical()) {
    throw Error(ErrorCode::kInvalidArgument,
                "stratify_on column '" + spec.name + "' is not categorical");
  }
  std::vector<std::vector<std::size_t>> groups(spec.categories.size());
  for (std::size_t i : candidates) groups[strata_source->category(i, col)].push_back(i);
  std::vector<std::size_t> counts;
  for (const auto& g : groups) counts.push_back(g.size());
  const std::vector<std::size_t> alloc = largest_remainder_allocation(counts, plan.size);

  std::vector<std::size_t> out;
  out.reserve(plan.size);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto picked = draw(std::move(groups[g]), alloc[g], rng);
    out.insert(out.end(), picked.begin(), picked.end());
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

Sample sample(const Table& t, const SamplePlan& plan) {
  std::vector<std::size_t> indices = sample_indices(t.num_rows(), plan, &t);
  Table picked = t.select_rows(indices);
  return Sample{std::move(picked), std::move(indices)};
}

}  // namespace ppbench
