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

#ifndef PPBENCH_FOREST_H_
#define PPBENCH_FOREST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppbench/table.h"

namespace ppbench {

enum class FeatureSubsample { kSqrtM, kAll };

struct ForestConfig {
  int n_trees = 100;
  std::optional<int> max_depth;  // unlimited when empty
  int min_samples_split = 2;
  FeatureSubsample feature_subsample = FeatureSubsample::kSqrtM;
  // Numeric thresholds examined per feature per node; midpoints are
  // subsampled uniformly when a node has more.
  int max_thresholds = 64;
  std::uint64_t seed = 0;

  void validate() const;
};

// Gini impurity 1 - sum (c_i / N)^2. Throws kEmptySplit when N == 0.
double gini(std::span<const double> counts);

// Dense feature matrix the trees are grown on. Categorical features hold
// category indices and split one-vs-rest.
struct FeatureMatrix {
  std::vector<std::string> names;
  std::vector<bool> categorical;
  std::vector<int> cardinality;           // categorical features only
  std::vector<std::vector<double>> columns;  // feature-major
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

struct TreeNode {
  int feature = -1;  // -1 for a leaf
  bool categorical = false;
  // Numeric: x <= threshold goes left. Categorical: x == threshold goes left.
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<double> class_counts;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  const TreeNode& leaf_for(std::span<const double> features) const;
};

struct PredictionVector {
  std::vector<double> probabilities;
  int predicted_class = 0;
  std::optional<int> true_label;
};

// Builds a prediction vector, setting predicted_class to the argmax (lowest
// index on ties).
PredictionVector make_prediction(std::vector<double> probabilities,
                                 std::optional<int> true_label = std::nullopt);

struct ForestModel {
  // Training schema (target included) when fit from a Table.
  std::optional<Schema> schema;
  std::vector<std::string> feature_names;
  std::vector<bool> categorical;
  int num_classes = 0;
  std::vector<DecisionTree> trees;

  PredictionVector predict_row(std::span<const double> features) const;

  nlohmann::json to_json() const;
  static ForestModel from_json(const nlohmann::json& j);
};

// CART trees on bootstrap resamples, Gini criterion. Throws kNoTargetColumn,
// kEmptyTrainingSet.
ForestModel fit_forest(const Table& train, const ForestConfig& cfg);
ForestModel fit_forest(const FeatureMatrix& x, std::span<const int> labels, int num_classes,
                       const ForestConfig& cfg);

// Average of per-tree leaf class frequencies. The target column, if present,
// becomes the true label. Throws kSchemaMismatch.
std::vector<PredictionVector> predict(const ForestModel& model, const Table& t);
std::vector<PredictionVector> predict(const ForestModel& model, const FeatureMatrix& x);

// Fraction of vectors whose argmax equals the true label. Throws
// kMissingLabels, kEmptyInput.
double accuracy(std::span<const PredictionVector> predictions);

// Non-target columns of `t` as a feature matrix.
FeatureMatrix features_of(const Table& t);

}  // namespace ppbench

#endif  // PPBENCH_FOREST_H_
