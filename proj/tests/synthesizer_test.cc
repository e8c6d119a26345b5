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

#include "ppbench/synthesizer.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "ppbench/discretize.h"
#include "ppbench/error.h"
#include "ppbench/metrics.h"
#include "test_util.h"

namespace ppbench {
namespace {

using testing::categorical;
using testing::numeric;

TEST(DiscretizeTest, TwoBinsOverRange) {
  const Discretization d = discretize(testing::numeric_column({0, 10, 4.9, 5}), 2);
  EXPECT_EQ(d.edges[0], (std::vector<double>{0, 5, 10}));
  EXPECT_EQ(d.table.category(0, 0), 0);
  EXPECT_EQ(d.table.category(1, 0), 1);
  EXPECT_EQ(d.table.category(2, 0), 0);
  EXPECT_EQ(d.table.category(3, 0), 1);
  EXPECT_FALSE(d.any_degenerate());
}

TEST(DiscretizeTest, ConstantColumnFlagged) {
  const Discretization d = discretize(testing::numeric_column({3, 3, 3}), 5);
  EXPECT_TRUE(d.degenerate[0]);
  EXPECT_EQ(d.cardinality[0], 1);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(d.table.category(r, 0), 0);
}

TEST(DiscretizeTest, CategoricalPassesThrough) {
  const Table t(Schema({categorical("c", {"a", "b", "c"})}), {{2, 0, 1}});
  const Discretization d = discretize(t, 4);
  EXPECT_EQ(d.table, t);
  EXPECT_THROW(discretize(t, 1), Error);
}

Table coins(std::vector<double> a, std::vector<double> b) {
  return Table(Schema({categorical("a", {"0", "1"}), categorical("b", {"0", "1"})}),
               {std::move(a), std::move(b)});
}

const std::vector<std::size_t> kB{1};

TEST(MutualInformationTest, Independent) {
  EXPECT_NEAR(mutual_information(coins({0, 0, 1, 1}, {0, 1, 0, 1}), 0, kB), 0.0, 1e-15);
}

TEST(MutualInformationTest, Copy) {
  EXPECT_NEAR(mutual_information(coins({0, 1, 0, 1}, {0, 1, 0, 1}), 0, kB), std::log(2.0), 1e-12);
}

TEST(MutualInformationTest, HandSum) {
  // Joint counts {(0,0):2, (0,1):1, (1,0):1, (1,1):4}, n = 8.
  const Table t = coins({0, 0, 0, 1, 1, 1, 1, 1}, {0, 0, 1, 0, 1, 1, 1, 1});
  const double n = 8;
  const double pa[2] = {3 / n, 5 / n}, pb[2] = {3 / n, 5 / n};
  const double joint[2][2] = {{2 / n, 1 / n}, {1 / n, 4 / n}};
  double expected = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) expected += joint[x][y] * std::log(joint[x][y] / (pa[x] * pb[y]));
  }
  EXPECT_NEAR(mutual_information(t, 0, kB), expected, 1e-12);
}

TEST(MutualInformationTest, EmptyTable) {
  EXPECT_THROW(mutual_information(coins({}, {}), 0, kB), Error);
}

GeneratorConfig baynet(int bins = 10, int max_parents = 2) {
  GeneratorConfig cfg;
  cfg.method = SynthMethod::kBayNet;
  cfg.bins = bins;
  cfg.max_parents = max_parents;
  return cfg;
}

TEST(BayNetTest, CopyColumnGetsParent) {
  const Table t = coins({0, 1, 1, 0, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 1, 0, 1});
  const BayesNetModel m = fit_baynet(t, baynet());
  const std::size_t second = m.order[1];
  EXPECT_EQ(m.parents[second], std::vector<std::size_t>{m.order[0]});
  EXPECT_NO_THROW(m.validate());
}

TEST(BayNetTest, SingleColumn) {
  const BayesNetModel m = fit_baynet(testing::numeric_column({1, 2, 3}), baynet(2));
  EXPECT_EQ(m.order, std::vector<std::size_t>{0});
  EXPECT_TRUE(m.parents[0].empty());
  EXPECT_EQ(m.conditionals[0].size(), 2u);
}

TEST(BayNetTest, MaxParentsOne) {
  Rng rng(3);
  const Table t = testing::random_qid_table(rng, 200, 3);
  const BayesNetModel m = fit_baynet(t, baynet(5, 1));
  for (const auto& p : m.parents) EXPECT_LE(p.size(), 1u);
  EXPECT_NO_THROW(m.validate());
}

TEST(BayNetTest, HighestEntropyRootLowestIndexOnTies) {
  // Column 1 has 4 equally likely values, column 0 only 2.
  const Table t(Schema({categorical("a", {"0", "1"}), categorical("b", {"0", "1", "2", "3"})}),
                {{0, 1, 0, 1}, {0, 1, 2, 3}});
  EXPECT_EQ(fit_baynet(t, baynet()).order[0], 1u);
  EXPECT_EQ(fit_baynet(coins({0, 1, 0, 1}, {1, 0, 0, 1}), baynet()).order[0], 0u);
}

TEST(BayNetTest, JsonRoundTrip) {
  Rng rng(4);
  const BayesNetModel m = fit_baynet(testing::random_qid_table(rng, 100, 2), baynet(3));
  const BayesNetModel back = BayesNetModel::from_json(m.to_json());
  EXPECT_EQ(back.to_json().dump(), m.to_json().dump());
  EXPECT_EQ(sample_synthetic(back, 20, 9), sample_synthetic(m, 20, 9));
}

TEST(SampleTest, ConstantTable) {
  const Table t(Schema({numeric("x"), categorical("c", {"a", "b"})}), {{4, 4, 4}, {1, 1, 1}});
  const std::size_t n = 4000;
  const Table s = synthesize(t, baynet(), n);
  std::size_t b = 0;
  for (std::size_t r = 0; r < n; ++r) {
    EXPECT_EQ(s.at(r, 0), 4.0);
    b += s.category(r, 1) == 1;
  }
  // Add-one smoothing over 2 categories with 3 observations: (3 + 1) / (3 + 2).
  EXPECT_NEAR(static_cast<double>(b) / n, 0.8, 0.03);
}

TEST(SampleTest, ZeroRows) {
  const Table t = testing::numeric_column({1, 2});
  const Table s = sample_synthetic(fit_baynet(t, baynet()), 0, 1);
  EXPECT_EQ(s.num_rows(), 0u);
  EXPECT_EQ(s.schema(), t.schema());
}

TEST(SampleTest, CorrelatedColumnsAgree) {
  std::vector<double> a(1000);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = double(i % 2);
  const Table t = coins(a, a);
  const Table s = sample_synthetic(fit_baynet(t, baynet()), 10000, 5);
  std::size_t agree = 0;
  for (std::size_t r = 0; r < s.num_rows(); ++r) agree += s.at(r, 0) == s.at(r, 1);
  EXPECT_GE(agree, 9500u);
}

TEST(SampleTest, ValuesWithinEdgesAndDeterministic) {
  Rng rng(6);
  for (SynthMethod method : {SynthMethod::kIndHist, SynthMethod::kBayNet, SynthMethod::kPrivBayes}) {
    const Table t = testing::random_qid_table(rng, 150, 4);
    GeneratorConfig cfg = baynet(4);
    cfg.method = method;
    cfg.seed = 77;
    const Table s = synthesize(t, cfg, 400);
    EXPECT_EQ(synthesize(t, cfg, 400), s);
    for (std::size_t c = 0; c < t.num_columns(); ++c) {
      if (!t.schema().column(c).is_numeric()) continue;
      const auto [lo, hi] = std::minmax_element(t.column(c).begin(), t.column(c).end());
      for (double v : s.column(c)) {
        EXPECT_GE(v, *lo);
        EXPECT_LE(v, *hi);
      }
    }
  }
}

GeneratorConfig privbayes(double eps, int bins = 10) {
  GeneratorConfig cfg = baynet(bins);
  cfg.method = SynthMethod::kPrivBayes;
  cfg.epsilon = eps;
  return cfg;
}

Table dependent_table(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> a(n), b(n), c(n), x(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = double(rng() % 3);
    b[i] = uniform01(rng) < 0.9 ? a[i] : double(rng() % 3);
    c[i] = double((int(b[i]) + (uniform01(rng) < 0.8 ? 0 : 1)) % 2);
    x[i] = 10.0 * a[i] + 3.0 * uniform01(rng);
  }
  return Table(Schema({categorical("a", {"p", "q", "r"}), categorical("b", {"p", "q", "r"}),
                       categorical("c", {"y", "n"}), numeric("x")}),
               {a, b, c, x});
}

TEST(PrivBayesTest, AccountingSumsToEpsilon) {
  const Table t = dependent_table(200, 1);
  for (double eps : {0.1, 1.0, 10.0, 15.0}) {
    const PrivBayesFit fit = fit_privbayes(t, privbayes(eps));
    EXPECT_EQ(fit.account.epsilon_structure + fit.account.epsilon_parameters, eps);
    EXPECT_NO_THROW(fit.model.validate());
  }
}

// With a huge budget the mechanism concentrates on the greedy argmax and the
// noisy counts collapse onto the true ones.
TEST(PrivBayesTest, LargeEpsilonConvergesToBayNet) {
  const Table t = dependent_table(3000, 2);
  const BayesNetModel exact = fit_baynet(t, baynet(4));
  const PrivBayesFit fit = fit_privbayes(t, privbayes(1e9, 4));
  EXPECT_EQ(fit.model.order, exact.order);
  EXPECT_EQ(fit.model.parents, exact.parents);
  EXPECT_FALSE(fit.budget_exhausted);
  const Discretization d = discretize(t, 4);
  for (std::size_t col = 0; col < t.num_columns(); ++col) {
    // Oracle: empirical conditional frequencies by direct counting.
    std::map<std::vector<int>, std::vector<double>> counts;
    for (std::size_t r = 0; r < t.num_rows(); ++r) {
      std::vector<int> key;
      for (std::size_t p : exact.parents[col]) key.push_back(d.table.category(r, p));
      auto& row = counts[key];
      row.resize(d.cardinality[col], 0.0);
      row[d.table.category(r, col)] += 1.0;
    }
    for (const auto& [key, row] : counts) {
      double total = 0.0;
      for (double v : row) total += v;
      std::size_t config = 0;
      for (std::size_t i = 0; i < key.size(); ++i) {
        config = config * exact.cardinality[exact.parents[col][i]] + key[i];
      }
      const auto dist = fit.model.distribution(col, config);
      for (std::size_t v = 0; v < row.size(); ++v) EXPECT_NEAR(dist[v], row[v] / total, 1e-6);
    }
  }
}

TEST(PrivBayesTest, TinyEpsilonStillValid) {
  const Table t = dependent_table(50, 3);
  const PrivBayesFit fit = fit_privbayes(t, privbayes(1e-6));
  EXPECT_NO_THROW(fit.model.validate());
  EXPECT_EQ(sample_synthetic(fit.model, 10, 1).num_rows(), 10u);
}

TEST(PrivBayesTest, ConfigValidation) {
  EXPECT_THROW(privbayes(0.0).validate(), Error);
  EXPECT_THROW(baynet(1).validate(), Error);
  EXPECT_THROW(baynet(5, 0).validate(), Error);
}

TEST(IndHistTest, PointMass) {
  const Table t(Schema({numeric("x"), categorical("c", {"a", "b"})}), {{2, 2}, {0, 0}});
  GeneratorConfig cfg = baynet();
  cfg.method = SynthMethod::kIndHist;
  const Table s = synthesize(t, cfg, 30);
  for (std::size_t r = 0; r < 30; ++r) EXPECT_EQ(s.category(r, 1), 0);
}

TEST(IndHistTest, BreaksDependenceKeepsMarginals) {
  std::vector<double> a(10000);
  Rng rng(8);
  for (double& v : a) v = double(rng() % 2);
  const Table t = coins(a, a);
  GeneratorConfig cfg = baynet();
  cfg.method = SynthMethod::kIndHist;
  cfg.seed = 4;
  const Table s = synthesize(t, cfg, 10000);
  EXPECT_LE(mutual_information(s, 0, kB), 0.05);
  for (std::size_t c = 0; c < 2; ++c) {
    EXPECT_GE(tvd_complement(category_counts(t, c), category_counts(s, c)), 0.95);
  }
  EXPECT_TRUE(fit_indhist(t, cfg).parents[1].empty());
}

}  // namespace
}  // namespace ppbench
