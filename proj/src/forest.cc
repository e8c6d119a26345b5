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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "ppbench/error.h"
#include "ppbench/io.h"
#include "ppbench/random.h"

namespace ppbench {
namespace {

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double score = 0.0;
};

double gini_of(const std::vector<double>& counts, double total) {
  if (total <= 0) return 0.0;
  double s = 0.0;
  for (double c : counts) s += (c / total) * (c / total);
  return 1.0 - s;
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& x, std::span<const int> y, int num_classes,
              const ForestConfig& cfg, std::uint64_t seed)
      : x_(x), y_(y), k_(static_cast<std::size_t>(num_classes)), cfg_(cfg), rng_(seed) {
    const std::size_t p = x.columns.size();
    mtry_ = cfg.feature_subsample == FeatureSubsample::kAll
                ? p
                : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(p))));
    mtry_ = std::max<std::size_t>(1, std::min(mtry_, p));
  }

  DecisionTree build() {
    const std::size_t n = x_.rows();
    std::vector<std::size_t> rows(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t& r : rows) r = pick(rng_);
    tree_.nodes.clear();
    grow(rows, 0);
    return std::move(tree_);
  }

 private:
  int grow(const std::vector<std::size_t>& rows, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::vector<double> counts(k_, 0.0);
    for (std::size_t r : rows) counts[static_cast<std::size_t>(y_[r])] += 1.0;
    const double n = static_cast<double>(rows.size());
    const bool pure = std::count_if(counts.begin(), counts.end(),
                                    [](double c) { return c > 0; }) <= 1;
    const bool depth_reached = cfg_.max_depth && depth >= *cfg_.max_depth;
    if (pure || depth_reached || rows.size() < static_cast<std::size_t>(cfg_.min_samples_split)) {
      tree_.nodes[id].class_counts = std::move(counts);
      return id;
    }

    const SplitCandidate best = find_split(rows, counts, n);
    if (best.feature < 0) {
      tree_.nodes[id].class_counts = std::move(counts);
      return id;
    }
    const bool is_cat = x_.categorical[best.feature];
    const std::vector<double>& col = x_.columns[best.feature];
    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    for (std::size_t r : rows) {
      const bool left = is_cat ? col[r] == best.threshold : col[r] <= best.threshold;
      (left ? left_rows : right_rows).push_back(r);
    }
    const int left = grow(left_rows, depth + 1);
    const int right = grow(right_rows, depth + 1);
    TreeNode& node = tree_.nodes[id];
    node.feature = best.feature;
    node.categorical = is_cat;
    node.threshold = best.threshold;
    node.left = left;
    node.right = right;
    return id;
  }

  SplitCandidate find_split(const std::vector<std::size_t>& rows,
                            const std::vector<double>& counts, double n) {
    std::vector<std::size_t> features(x_.columns.size());
    std::iota(features.begin(), features.end(), 0);
    std::shuffle(features.begin(), features.end(), rng_);
    SplitCandidate best;
    best.score = std::numeric_limits<double>::infinity();
    std::size_t evaluated = 0;
    for (std::size_t f : features) {
      if (evaluated >= mtry_) break;
      const bool varied = x_.categorical[f] ? categorical_split(f, rows, counts, n, best)
                                            : numeric_split(f, rows, counts, n, best);
      if (varied) ++evaluated;
    }
    return best;
  }

  void consider(int feature, double threshold, const std::vector<double>& left,
                const std::vector<double>& total, double nl, double n, SplitCandidate& best) {
    const double nr = n - nl;
    if (nl <= 0 || nr <= 0) return;
    std::vector<double>& right = scratch_;
    right.resize(k_);
    for (std::size_t c = 0; c < k_; ++c) right[c] = total[c] - left[c];
    const double score = (nl * gini_of(left, nl) + nr * gini_of(right, nr)) / n;
    if (score < best.score) best = {feature, threshold, score};
  }

  bool numeric_split(std::size_t f, const std::vector<std::size_t>& rows,
                     const std::vector<double>& counts, double n, SplitCandidate& best) {
    const std::vector<double>& col = x_.columns[f];
    pairs_.clear();
    for (std::size_t r : rows) pairs_.emplace_back(col[r], y_[r]);
    std::sort(pairs_.begin(), pairs_.end());
    if (pairs_.front().first == pairs_.back().first) return false;

    std::vector<double> thresholds;
    for (std::size_t i = 1; i < pairs_.size(); ++i) {
      if (pairs_[i].first != pairs_[i - 1].first) {
        thresholds.push_back(pairs_[i - 1].first + (pairs_[i].first - pairs_[i - 1].first) / 2.0);
      }
    }
    const auto cap = static_cast<std::size_t>(cfg_.max_thresholds);
    if (thresholds.size() > cap) {
      std::vector<std::size_t> keep(thresholds.size());
      std::iota(keep.begin(), keep.end(), 0);
      for (std::size_t i = 0; i < cap; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, keep.size() - 1);
        std::swap(keep[i], keep[pick(rng_)]);
      }
      keep.resize(cap);
      std::sort(keep.begin(), keep.end());
      std::vector<double> subset;
      for (std::size_t i : keep) subset.push_back(thresholds[i]);
      thresholds = std::move(subset);
    }

    std::vector<double> left(k_, 0.0);
    std::size_t pos = 0;
    double nl = 0;
    for (double thr : thresholds) {
      while (pos < pairs_.size() && pairs_[pos].first <= thr) {
        left[static_cast<std::size_t>(pairs_[pos].second)] += 1.0;
        nl += 1.0;
        ++pos;
      }
      consider(static_cast<int>(f), thr, left, counts, nl, n, best);
    }
    return true;
  }

  bool categorical_split(std::size_t f, const std::vector<std::size_t>& rows,
                         const std::vector<double>& counts, double n, SplitCandidate& best) {
    const std::vector<double>& col = x_.columns[f];
    const auto card = static_cast<std::size_t>(x_.cardinality[f]);
    std::vector<std::vector<double>> by_cat(card, std::vector<double>(k_, 0.0));
    std::vector<double> size(card, 0.0);
    for (std::size_t r : rows) {
      const auto c = static_cast<std::size_t>(col[r]);
      by_cat[c][static_cast<std::size_t>(y_[r])] += 1.0;
      size[c] += 1.0;
    }
    if (std::count_if(size.begin(), size.end(), [](double s) { return s > 0; }) < 2) {
      return false;
    }
    for (std::size_t c = 0; c < card; ++c) {
      if (size[c] > 0) consider(static_cast<int>(f), static_cast<double>(c), by_cat[c], counts, size[c], n, best);
    }
    return true;
  }

  const FeatureMatrix& x_;
  std::span<const int> y_;
  std::size_t k_;
  const ForestConfig& cfg_;
  Rng rng_;
  std::size_t mtry_ = 1;
  DecisionTree tree_;
  std::vector<std::pair<double, int>> pairs_;
  std::vector<double> scratch_;
};

void check_features(const ForestModel& model, const FeatureMatrix& x) {
  if (x.names != model.feature_names || x.categorical != model.categorical) {
    throw Error(ErrorCode::kSchemaMismatch, "features differ from the training features");
  }
}

}  // namespace

void ForestConfig::validate() const {
  if (n_trees < 1) throw Error(ErrorCode::kInvalidArgument, "n_trees must be >= 1");
  if (min_samples_split < 2) {
    throw Error(ErrorCode::kInvalidArgument, "min_samples_split must be >= 2");
  }
  if (max_depth && *max_depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_depth must be >= 1");
  }
  if (max_thresholds < 1) throw Error(ErrorCode::kInvalidArgument, "max_thresholds must be >= 1");
}

double gini(std::span<const double> counts) {
  double total = 0.0;
  for (double c : counts) {
    if (c < 0) throw Error(ErrorCode::kInvalidArgument, "negative class count");
    total += c;
  }
  if (total <= 0) throw Error(ErrorCode::kEmptySplit, "gini of an empty split");
  double s = 0.0;
  for (double c : counts) s += (c / total) * (c / total);
  return 1.0 - s;
}

const TreeNode& DecisionTree::leaf_for(std::span<const double> features) const {
  const TreeNode* node = &nodes.at(0);
  while (node->feature >= 0) {
    const double v = features[static_cast<std::size_t>(node->feature)];
    const bool left = node->categorical ? v == node->threshold : v <= node->threshold;
    node = &nodes[static_cast<std::size_t>(left ? node->left : node->right)];
  }
  return *node;
}

PredictionVector make_prediction(std::vector<double> probabilities,
                                 std::optional<int> true_label) {
  PredictionVector pv;
  pv.predicted_class = static_cast<int>(
      std::max_element(probabilities.begin(), probabilities.end()) - probabilities.begin());
  pv.probabilities = std::move(probabilities);
  pv.true_label = true_label;
  return pv;
}

PredictionVector ForestModel::predict_row(std::span<const double> features) const {
  std::vector<double> probs(static_cast<std::size_t>(num_classes), 0.0);
  for (const DecisionTree& tree : trees) {
    const TreeNode& leaf = tree.leaf_for(features);
    const double total = std::accumulate(leaf.class_counts.begin(), leaf.class_counts.end(), 0.0);
    for (std::size_t c = 0; c < probs.size(); ++c) probs[c] += leaf.class_counts[c] / total;
  }
  for (double& p : probs) p /= static_cast<double>(trees.size());
  return make_prediction(std::move(probs));
}

FeatureMatrix features_of(const Table& t) {
  FeatureMatrix x;
  const auto target = t.schema().target_index();
  for (std::size_t c = 0; c < t.num_columns(); ++c) {
    if (target && c == *target) continue;
    const ColumnSpec& spec = t.schema().column(c);
    x.names.push_back(spec.name);
    x.categorical.push_back(spec.is_categorical());
    x.cardinality.push_back(static_cast<int>(spec.categories.size()));
    x.columns.emplace_back(t.column(c).begin(), t.column(c).end());
  }
  return x;
}

ForestModel fit_forest(const FeatureMatrix& x, std::span<const int> labels, int num_classes,
                       const ForestConfig& cfg) {
  cfg.validate();
  if (labels.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no training rows");
  if (x.rows() != labels.size() && !x.columns.empty()) {
    throw Error(ErrorCode::kArityMismatch, "feature and label counts differ");
  }
  if (num_classes < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one class");
  for (int y : labels) {
    if (y < 0 || y >= num_classes) throw Error(ErrorCode::kInvalidArgument, "label out of range");
  }
  ForestModel model;
  model.feature_names = x.names;
  model.categorical = x.categorical;
  model.num_classes = num_classes;
  model.trees.reserve(static_cast<std::size_t>(cfg.n_trees));
  FeatureMatrix padded;
  const FeatureMatrix* source = &x;
  if (x.columns.empty()) {
    // Featureless input still trains a stump per tree over the labels.
    padded.names = {};
    padded.columns = {std::vector<double>(labels.size(), 0.0)};
    padded.categorical = {false};
    padded.cardinality = {0};
    source = &padded;
  }
  for (int i = 0; i < cfg.n_trees; ++i) {
    TreeBuilder builder(*source, labels, num_classes, cfg,
                        derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    model.trees.push_back(builder.build());
  }
  return model;
}

ForestModel fit_forest(const Table& train, const ForestConfig& cfg) {
  const auto target = train.schema().target_index();
  if (!target) throw Error(ErrorCode::kNoTargetColumn, "training table has no target column");
  if (train.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "training table is empty");
  std::vector<int> labels(train.num_rows());
  for (std::size_t r = 0; r < train.num_rows(); ++r) labels[r] = train.category(r, *target);
  const int classes = static_cast<int>(train.schema().column(*target).categories.size());
  ForestModel model = fit_forest(features_of(train), labels, classes, cfg);
  model.schema = train.schema();
  return model;
}

std::vector<PredictionVector> predict(const ForestModel& model, const FeatureMatrix& x) {
  check_features(model, x);
  const std::size_t n = x.rows();
  std::vector<PredictionVector> out;
  out.reserve(n);
  std::vector<double> row(std::max<std::size_t>(x.columns.size(), 1), 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t f = 0; f < x.columns.size(); ++f) row[f] = x.columns[f][r];
    out.push_back(model.predict_row(row));
  }
  return out;
}

std::vector<PredictionVector> predict(const ForestModel& model, const Table& t) {
  if (!model.schema) {
    throw Error(ErrorCode::kSchemaMismatch, "model was not trained on a table");
  }
  require_same_schema(*model.schema, t.schema());
  if (t.empty()) return {};
  std::vector<PredictionVector> out = predict(model, features_of(t));
  const auto target = t.schema().target_index();
  for (std::size_t r = 0; r < out.size(); ++r) out[r].true_label = t.category(r, *target);
  return out;
}

double accuracy(std::span<const PredictionVector> predictions) {
  if (predictions.empty()) throw Error(ErrorCode::kEmptyInput, "no predictions");
  std::size_t correct = 0;
  for (const PredictionVector& p : predictions) {
    if (!p.true_label) throw Error(ErrorCode::kMissingLabels, "prediction without a true label");
    if (p.predicted_class == *p.true_label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

nlohmann::json ForestModel::to_json() const {
  nlohmann::json trees_json = nlohmann::json::array();
  for (const DecisionTree& tree : trees) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const TreeNode& n : tree.nodes) {
      nodes.push_back({n.feature, n.categorical, n.threshold, n.left, n.right, n.class_counts});
    }
    trees_json.push_back(std::move(nodes));
  }
  nlohmann::json j = {{"feature_names", feature_names},
                      {"categorical", categorical},
                      {"num_classes", num_classes},
                      {"trees", trees_json}};
  if (schema) j["schema"] = schema_to_json(*schema);
  return j;
}

ForestModel ForestModel::from_json(const nlohmann::json& j) {
  ForestModel model;
  model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
  model.categorical = j.at("categorical").get<std::vector<bool>>();
  model.num_classes = j.at("num_classes").get<int>();
  for (const auto& nodes : j.at("trees")) {
    DecisionTree tree;
    for (const auto& n : nodes) {
      TreeNode node;
      node.feature = n.at(0).get<int>();
      node.categorical = n.at(1).get<bool>();
      node.threshold = n.at(2).get<double>();
      node.left = n.at(3).get<int>();
      node.right = n.at(4).get<int>();
      node.class_counts = n.at(5).get<std::vector<double>>();
      tree.nodes.push_back(std::move(node));
    }
    model.trees.push_back(std::move(tree));
  }
  if (j.contains("schema")) model.schema = schema_from_json(j.at("schema"));
  return model;
}

}  // namespace ppbench
