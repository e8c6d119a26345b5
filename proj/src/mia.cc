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

#include "ppbench/mia.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "ppbench/error.h"
#include "ppbench/random.h"

namespace ppbench {
namespace {

double top_probability(const PredictionVector& p) {
  return *std::max_element(p.probabilities.begin(), p.probabilities.end());
}

std::vector<double> vector_features(const PredictionVector& p) {
  std::vector<double> f(p.probabilities);
  std::sort(f.begin(), f.end(), std::greater<>());
  const int label = *p.true_label;
  f.push_back(p.predicted_class == label ? 1.0 : 0.0);
  f.push_back(-std::log(std::max(p.probabilities.at(static_cast<std::size_t>(label)), 1e-12)));
  return f;
}

// L2-regularized logistic regression fit by Newton iterations on
// standardized features.
class LogisticAttack {
 public:
  void fit(const std::vector<std::vector<double>>& x, const std::vector<int>& y) {
    const std::size_t n = x.size();
    const std::size_t p = x.front().size();
    mean_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
    scale_ = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(p));
    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) design(i, j) = x[i][j];
    }
    for (std::size_t j = 0; j < p; ++j) {
      const auto col = design.col(static_cast<Eigen::Index>(j));
      mean_(j) = col.mean();
      const double sd = std::sqrt((col.array() - mean_(j)).square().mean());
      scale_(j) = sd > 1e-12 ? sd : 1.0;
      design.col(j) = (col.array() - mean_(j)) / scale_(j);
    }
    design.col(static_cast<Eigen::Index>(p)).setOnes();
    Eigen::VectorXd target(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) target(i) = y[i];

    weights_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p + 1));
    constexpr double kRidge = 1e-3;
    for (int iter = 0; iter < 50; ++iter) {
      const Eigen::VectorXd prob = sigmoid(design * weights_);
      const Eigen::VectorXd w = (prob.array() * (1.0 - prob.array())).max(1e-9);
      Eigen::VectorXd grad = design.transpose() * (prob - target) + kRidge * weights_;
      Eigen::MatrixXd hess = design.transpose() * w.asDiagonal() * design;
      hess.diagonal().array() += kRidge;
      const Eigen::VectorXd step = hess.ldlt().solve(grad);
      weights_ -= step;
      if (step.cwiseAbs().maxCoeff() < 1e-8) break;
    }
  }

  int predict(const std::vector<double>& x) const {
    double z = weights_(weights_.size() - 1);
    for (std::size_t j = 0; j < x.size(); ++j) z += weights_(j) * (x[j] - mean_(j)) / scale_(j);
    return z >= 0.0 ? 1 : 0;
  }

 private:
  static Eigen::VectorXd sigmoid(const Eigen::VectorXd& z) {
    return (1.0 + (-z.array()).exp()).inverse().matrix();
  }

  Eigen::VectorXd mean_;
  Eigen::VectorXd scale_;
  Eigen::VectorXd weights_;
};

std::vector<std::size_t> assign_folds(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> fold(n);
  for (std::size_t pos = 0; pos < n; ++pos) fold[order[pos]] = pos % k;
  return fold;
}

}  // namespace

std::string_view to_string(MiaAttackKind kind) {
  return kind == MiaAttackKind::kThreshold ? "threshold" : "logistic";
}

MiaAttackKind parse_mia_kind(std::string_view name) {
  if (name == "threshold") return MiaAttackKind::kThreshold;
  if (name == "logistic" || name == "logistic_on_vector") return MiaAttackKind::kLogisticOnVector;
  throw Error(ErrorCode::kConfig, "unknown MIA attack '" + std::string(name) + "'");
}

double best_threshold(std::span<const double> member_scores,
                      std::span<const double> non_member_scores) {
  if (member_scores.empty() || non_member_scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, "threshold search needs both classes");
  }
  std::set<double> grid(member_scores.begin(), member_scores.end());
  grid.insert(non_member_scores.begin(), non_member_scores.end());
  std::vector<double> in(member_scores.begin(), member_scores.end());
  std::vector<double> out(non_member_scores.begin(), non_member_scores.end());
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  auto rate_at_least = [](const std::vector<double>& v, double t) {
    const auto below = std::lower_bound(v.begin(), v.end(), t) - v.begin();
    return static_cast<double>(v.size() - static_cast<std::size_t>(below)) /
           static_cast<double>(v.size());
  };
  double best = *grid.begin();
  double best_adv = -2.0;
  for (double t : grid) {  // ascending, so ties keep the lower threshold
    const double adv = rate_at_least(in, t) - rate_at_least(out, t);
    if (adv > best_adv) {
      best_adv = adv;
      best = t;
    }
  }
  return best;
}

MiaResult mia_attack_on_vectors(std::span<const PredictionVector> members,
                                std::span<const PredictionVector> non_members,
                                const MiaConfig& cfg) {
  if (cfg.folds < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 folds");
  if (members.size() < cfg.folds || non_members.size() < cfg.folds) {
    throw Error(ErrorCode::kFoldTooSmall, "fewer vectors than folds on one side");
  }
  if (cfg.kind == MiaAttackKind::kLogisticOnVector) {
    for (const auto* side : {&members, &non_members}) {
      for (const PredictionVector& p : *side) {
        if (!p.true_label) throw Error(ErrorCode::kMissingLabels, "vector without a true label");
      }
    }
  }
  Rng rng(derive_seed(cfg.seed, "folds"));
  MiaResult result;
  result.member_fold = assign_folds(members.size(), cfg.folds, rng);
  result.non_member_fold = assign_folds(non_members.size(), cfg.folds, rng);

  for (std::size_t fold = 0; fold < cfg.folds; ++fold) {
    ConfusionCounts counts;
    if (cfg.kind == MiaAttackKind::kThreshold) {
      std::vector<double> in_train;
      std::vector<double> out_train;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (result.member_fold[i] != fold) in_train.push_back(top_probability(members[i]));
      }
      for (std::size_t i = 0; i < non_members.size(); ++i) {
        if (result.non_member_fold[i] != fold) out_train.push_back(top_probability(non_members[i]));
      }
      const double t = best_threshold(in_train, out_train);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (result.member_fold[i] != fold) continue;
        (top_probability(members[i]) >= t ? counts.tp : counts.fn) += 1;
      }
      for (std::size_t i = 0; i < non_members.size(); ++i) {
        if (result.non_member_fold[i] != fold) continue;
        (top_probability(non_members[i]) >= t ? counts.fp : counts.tn) += 1;
      }
    } else {
      std::vector<std::vector<double>> x;
      std::vector<int> y;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (result.member_fold[i] != fold) {
          x.push_back(vector_features(members[i]));
          y.push_back(1);
        }
      }
      for (std::size_t i = 0; i < non_members.size(); ++i) {
        if (result.non_member_fold[i] != fold) {
          x.push_back(vector_features(non_members[i]));
          y.push_back(0);
        }
      }
      LogisticAttack model;
      model.fit(x, y);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (result.member_fold[i] != fold) continue;
        (model.predict(vector_features(members[i])) == 1 ? counts.tp : counts.fn) += 1;
      }
      for (std::size_t i = 0; i < non_members.size(); ++i) {
        if (result.non_member_fold[i] != fold) continue;
        (model.predict(vector_features(non_members[i])) == 1 ? counts.fp : counts.tn) += 1;
      }
    }
    result.per_fold.push_back(AttackOutcome::from_counts(counts));
  }
  result.outcome = average_outcomes(result.per_fold);
  return result;
}

MiaResult mia_prediction_vector_attack(const ForestModel& victim, const Table& members,
                                       const Table& non_members, const MiaConfig& cfg,
                                       std::span<const std::size_t> member_ids,
                                       std::span<const std::size_t> non_member_ids) {
  const std::set<std::size_t> ids(member_ids.begin(), member_ids.end());
  for (std::size_t id : non_member_ids) {
    if (ids.count(id)) {
      throw Error(ErrorCode::kDisjointnessViolation,
                  "row " + std::to_string(id) + " is both member and non-member");
    }
  }
  if (!members.schema().target_index() || !non_members.schema().target_index()) {
    throw Error(ErrorCode::kMissingLabels, "attack tables must carry the target column");
  }
  const std::vector<PredictionVector> in = predict(victim, members);
  const std::vector<PredictionVector> out = predict(victim, non_members);
  return mia_attack_on_vectors(in, out, cfg);
}

}  // namespace ppbench
