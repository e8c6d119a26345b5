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

#include "ppbench/stats.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppbench/error.h"
#include "test_util.h"

namespace ppbench {
namespace {

using testing::categorical;
using testing::numeric;

// Oracle: sort, rank h = (n - 1) q, interpolate between neighbours.
double quantile_oracle(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double h = (v.size() - 1) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = static_cast<std::size_t>(std::ceil(h));
  return v[lo] + (h - lo) * (v[hi] - v[lo]);
}

TEST(QuantileTest, Examples) {
  const std::vector<double> v{40, 10, 30, 20};
  EXPECT_DOUBLE_EQ(quantile(v, 0.5), quantile_oracle(v, 0.5));
  EXPECT_DOUBLE_EQ(quantile(v, 0.5), 25.0);
  const std::vector<double> one{7};
  EXPECT_EQ(quantile(one, 0.95), 7.0);
  std::vector<double> hundred(100);
  std::iota(hundred.begin(), hundred.end(), 1.0);
  EXPECT_EQ(quantile(hundred, 0.0), 1.0);
  EXPECT_EQ(quantile(hundred, 1.0), 100.0);
}

TEST(QuantileTest, Errors) {
  const std::vector<double> empty;
  EXPECT_THROW(quantile(empty, 0.5), Error);
  const std::vector<double> v{1, 2};
  EXPECT_THROW(quantile(v, 1.5), Error);
}

TEST(QuantileProperty, MatchesOracleAndMonotone) {
  Rng rng(2);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + rng() % 50);
    for (double& x : v) x = u(rng);
    double q1 = uniform01(rng), q2 = uniform01(rng);
    if (q1 > q2) std::swap(q1, q2);
    EXPECT_NEAR(quantile(v, q1), quantile_oracle(v, q1), 1e-9);
    EXPECT_LE(quantile(v, q1), quantile(v, q2));
  }
}

TEST(CapTest, CapsTopValue) {
  const Table t = testing::numeric_column({1, 2, 3, 100});
  const std::vector<double> col{1, 2, 3, 100};
  const double cap = quantile_oracle(col, 0.95);
  const Table c = cap_numeric(t, 0.95);
  EXPECT_EQ(c.at(0, 0), 1.0);
  EXPECT_EQ(c.at(2, 0), 3.0);
  EXPECT_DOUBLE_EQ(c.at(3, 0), cap);
  EXPECT_LT(c.at(3, 0), 100.0);
}

TEST(CapTest, ConstantAndQOneUnchanged) {
  const Table flat = testing::numeric_column({4, 4, 4});
  EXPECT_EQ(cap_numeric(flat, 0.95), flat);
  const Table t = testing::numeric_column({5, 1, 9, 2});
  EXPECT_EQ(cap_numeric(t, 1.0), t);
}

TEST(CapTest, CategoricalUntouched) {
  const Table t(Schema({numeric("x"), categorical("c", {"a", "b", "c"})}),
                {{1, 2, 50}, {2, 1, 2}});
  const Table c = cap_numeric(t, 0.5);
  EXPECT_EQ(c.column(1)[0], 2.0);
  EXPECT_EQ(c.column(1)[2], 2.0);
}

TEST(CapProperty, Idempotent) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Table t = testing::random_qid_table(rng, 1 + rng() % 80, 3);
    const double q = 0.05 + 0.95 * uniform01(rng);
    const ColumnCaps caps = numeric_caps(t, q);
    const Table once = apply_caps(t, caps);
    EXPECT_EQ(once, cap_numeric(t, q));
    EXPECT_EQ(apply_caps(once, caps), once);
    EXPECT_EQ(once.num_rows(), t.num_rows());
    const Table twice = cap_numeric(once, q);
    for (std::size_t c = 0; c < t.num_columns(); ++c) {
      for (std::size_t r = 0; r < t.num_rows(); ++r) EXPECT_LE(twice.at(r, c), once.at(r, c));
    }
  }
}

TEST(OutlierTest, SingleColumn) {
  const Table t = testing::numeric_column({1, 1, 1, 1, 9}, {Role::kOutlierScored});
  const OutlierCatalog c = find_outliers(t, 1);
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0].row, 4u);
  // z = (9 - 2.6) / sqrt(mean of squared deviations)
  const double mu = 13.0 / 5, sd = std::sqrt((4 * (1 - mu) * (1 - mu) + (9 - mu) * (9 - mu)) / 5);
  EXPECT_NEAR(c.entries[0].score, (9 - mu) / sd, 1e-12);
  EXPECT_EQ(c.scored_columns, std::vector<std::string>{"x"});
}

TEST(OutlierTest, AllRowsSorted) {
  const Table t = testing::numeric_column({3, 1, 2, 5}, {Role::kOutlierScored});
  const OutlierCatalog c = find_outliers(t, 4);
  std::vector<std::size_t> rows;
  for (const auto& e : c.entries) rows.push_back(e.row);
  EXPECT_EQ(rows, (std::vector<std::size_t>{3, 0, 2, 1}));
}

TEST(OutlierTest, SummedZScores) {
  const Table t(Schema({numeric("a", {Role::kOutlierScored}), numeric("b", {Role::kOutlierScored}),
                        numeric("c")}),
                {{1, 10, 2, 3}, {5, 20, 6, 4}, {1000, 0, 0, 0}});
  EXPECT_EQ(find_outliers(t, 1).entries[0].row, 1u);
}

TEST(OutlierTest, Errors) {
  EXPECT_THROW(find_outliers(testing::numeric_column({1, 2}), 1), Error);
  try {
    find_outliers(testing::numeric_column({2, 2}, {Role::kOutlierScored}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateColumn);
  }
}

// Shuffling rows permutes the catalog identically.
TEST(OutlierProperty, PermutationInvariant) {
  Rng rng(8);
  std::uniform_real_distribution<double> u(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 40;
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
    }
    const Schema s({numeric("a", {Role::kOutlierScored}), numeric("b", {Role::kOutlierScored})});
    const Table t(s, {a, b});
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Table shuffled = t.select_rows(perm);
    const auto base = find_outliers(t, n).entries;
    const auto moved = find_outliers(shuffled, n).entries;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(perm[moved[i].row], base[i].row);
      EXPECT_NEAR(moved[i].score, base[i].score, 1e-9);
    }
  }
}

}  // namespace
}  // namespace ppbench
