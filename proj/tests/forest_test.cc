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

#include "ppbench/forest.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ppbench/error.h"
#include "test_util.h"

namespace ppbench {
namespace {

using testing::categorical;
using testing::numeric;

TEST(GiniTest, Examples) {
  const std::vector<double> even{5, 5}, pure{10, 0}, skew{3, 1}, none{0, 0};
  EXPECT_DOUBLE_EQ(gini(even), 0.5);
  EXPECT_DOUBLE_EQ(gini(pure), 0.0);
  EXPECT_DOUBLE_EQ(gini(skew), 1.0 - (9.0 / 16 + 1.0 / 16));
  EXPECT_THROW(gini(none), Error);
}

TEST(PredictionTest, ArgmaxLowestOnTies) {
  EXPECT_EQ(make_prediction({0.25, 0.5, 0.25}).predicted_class, 1);
  EXPECT_EQ(make_prediction({0.4, 0.2, 0.4}).predicted_class, 0);
}

Table xor_table(std::size_t copies) {
  std::vector<double> a, b, y;
  for (std::size_t i = 0; i < copies; ++i) {
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        a.push_back(p);
        b.push_back(q);
        y.push_back(p ^ q);
      }
    }
  }
  return Table(Schema({categorical("a", {"0", "1"}), categorical("b", {"0", "1"}),
                       categorical("y", {"0", "1"}, {Role::kTarget})}),
               {a, b, y});
}

TEST(ForestTest, SingleClass) {
  const Table t(Schema({numeric("x"), categorical("y", {"a", "b"}, {Role::kTarget})}),
                {{1, 2, 3, 4}, {1, 1, 1, 1}});
  ForestConfig cfg;
  cfg.n_trees = 10;
  const ForestModel m = fit_forest(t, cfg);
  for (const PredictionVector& p : predict(m, t)) {
    EXPECT_EQ(p.predicted_class, 1);
    EXPECT_EQ(p.probabilities[1], 1.0);
  }
}

TEST(ForestTest, LearnsXor) {
  const Table t = xor_table(25);
  ForestConfig cfg;
  cfg.n_trees = 50;
  cfg.max_depth = 2;
  cfg.feature_subsample = FeatureSubsample::kAll;
  cfg.seed = 3;
  const auto preds = predict(fit_forest(t, cfg), t);
  EXPECT_GE(accuracy(preds), 0.95);
  // Depth 1 cannot represent XOR.
  cfg.max_depth = 1;
  EXPECT_LE(accuracy(predict(fit_forest(t, cfg), t)), 0.8);
}

TEST(ForestTest, SameSeedSameForest) {
  Rng rng(1);
  const Table t = testing::random_qid_table(rng, 120, 3);
  ForestConfig cfg;
  cfg.n_trees = 15;
  cfg.seed = 42;
  const std::string a = fit_forest(t, cfg).to_json().dump();
  EXPECT_EQ(fit_forest(t, cfg).to_json().dump(), a);
  EXPECT_EQ(ForestModel::from_json(nlohmann::json::parse(a)).to_json().dump(), a);
  cfg.seed = 43;
  EXPECT_NE(fit_forest(t, cfg).to_json().dump(), a);
}

TEST(ForestTest, EmptyInputAndSchemaChecks) {
  const Table t = xor_table(2);
  ForestConfig cfg;
  cfg.n_trees = 3;
  const ForestModel m = fit_forest(t, cfg);
  EXPECT_TRUE(predict(m, Table(t.schema())).empty());
  const Table other(Schema({numeric("z"), categorical("y", {"0", "1"}, {Role::kTarget})}),
                    {{1}, {0}});
  try {
    predict(m, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaMismatch);
  }
  const Table no_target(Schema({numeric("x")}), {{1, 2}});
  try {
    fit_forest(no_target, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoTargetColumn);
  }
}

// Hand-built stump: x <= 2.5 goes left to counts {3, 1}, else right to {0, 2}.
TEST(ForestTest, ManualTreeWalk) {
  ForestModel m;
  m.feature_names = {"x"};
  m.categorical = {false};
  m.num_classes = 2;
  DecisionTree tree;
  tree.nodes.resize(3);
  tree.nodes[0].feature = 0;
  tree.nodes[0].threshold = 2.5;
  tree.nodes[0].left = 1;
  tree.nodes[0].right = 2;
  tree.nodes[1].class_counts = {3, 1};
  tree.nodes[2].class_counts = {0, 2};
  m.trees.push_back(tree);
  FeatureMatrix x;
  x.names = {"x"};
  x.categorical = {false};
  x.cardinality = {0};
  x.columns = {{1.0, 2.5, 7.0}};
  const auto preds = predict(m, x);
  EXPECT_EQ(preds[0].probabilities, (std::vector<double>{0.75, 0.25}));
  EXPECT_EQ(preds[1].probabilities, (std::vector<double>{0.75, 0.25}));
  EXPECT_EQ(preds[2].probabilities, (std::vector<double>{0.0, 1.0}));
}

TEST(AccuracyTest, Counts) {
  std::vector<PredictionVector> p{make_prediction({1, 0}, 0), make_prediction({1, 0}, 1),
                                  make_prediction({0, 1}, 1), make_prediction({0, 1}, 0)};
  EXPECT_EQ(accuracy(p), 0.5);
  p.resize(1);
  EXPECT_EQ(accuracy(p), 1.0);
  p[0].true_label = 1;
  EXPECT_EQ(accuracy(p), 0.0);
  p[0].true_label.reset();
  try {
    accuracy(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingLabels);
  }
}

// Normalized vectors; training accuracy beats the majority-class predictor.
TEST(ForestProperty, RandomTables) {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Table t = testing::random_qid_table(rng, 20 + rng() % 150, 2 + trial % 3);
    ForestConfig cfg;
    cfg.n_trees = 10;
    cfg.seed = rng();
    const auto preds = predict(fit_forest(t, cfg), t);
    for (const auto& p : preds) {
      double sum = 0.0;
      for (double v : p.probabilities) {
        EXPECT_GE(v, 0.0);
        sum += v;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
      EXPECT_EQ(p.predicted_class,
                std::max_element(p.probabilities.begin(), p.probabilities.end()) -
                    p.probabilities.begin());
    }
    const std::size_t y = *t.schema().target_index();
    const std::size_t ones = std::count(t.column(y).begin(), t.column(y).end(), 1.0);
    const double majority = double(std::max(ones, t.num_rows() - ones)) / t.num_rows();
    EXPECT_GE(accuracy(preds), majority);
  }
}

// Duplicating rows of one class pulls a fixed query point toward it.
TEST(ForestProperty, DuplicatesShiftProbabilities) {
  const Schema s({numeric("x"), categorical("y", {"a", "b"}, {Role::kTarget})});
  std::vector<double> x{1, 2, 3, 4, 5, 6}, y{0, 0, 0, 1, 1, 1};
  const Table query(s, {{3.5}, {0}});
  double previous = -1.0;
  for (int extra = 0; extra < 4; ++extra) {
    std::vector<double> xs = x, ys = y;
    for (int i = 0; i < extra * 3; ++i) {
      xs.push_back(3.5);
      ys.push_back(1);
    }
    ForestConfig cfg;
    cfg.n_trees = 200;
    cfg.seed = 5;
    const double p = predict(fit_forest(Table(s, {xs, ys}), cfg), query)[0].probabilities[1];
    EXPECT_GE(p, previous);
    previous = p;
  }
  EXPECT_GT(previous, 0.9);
}

}  // namespace
}  // namespace ppbench
