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

#ifndef PPBENCH_MIA_H_
#define PPBENCH_MIA_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ppbench/forest.h"
#include "ppbench/outcome.h"
#include "ppbench/table.h"

namespace ppbench {

enum class MiaAttackKind {
  // Member iff the top class probability reaches a threshold learned on the
  // training folds.
  kThreshold,
  // Logistic regression on (sorted probabilities, correctness, label loss).
  kLogisticOnVector,
};

std::string_view to_string(MiaAttackKind kind);
MiaAttackKind parse_mia_kind(std::string_view name);

struct MiaConfig {
  std::size_t folds = 5;
  MiaAttackKind kind = MiaAttackKind::kThreshold;
  std::uint64_t seed = 0;
};

struct MiaResult {
  // Fold-averaged rates.
  AttackOutcome outcome;
  std::vector<AttackOutcome> per_fold;
  // Fold index of every member / non-member vector.
  std::vector<std::size_t> member_fold;
  std::vector<std::size_t> non_member_fold;
};

// k-fold attack where the victim's own prediction vectors serve as shadow
// data: train on k-1 folds of labelled vectors, test on the held-out fold.
// Throws kFoldTooSmall when either side has fewer than k vectors,
// kMissingLabels when a vector lacks its true label.
MiaResult mia_attack_on_vectors(std::span<const PredictionVector> members,
                                std::span<const PredictionVector> non_members,
                                const MiaConfig& cfg);

// Predicts both tables with `victim` and runs the fold attack. When row ids
// are given they must be disjoint (kDisjointnessViolation).
MiaResult mia_prediction_vector_attack(const ForestModel& victim, const Table& members,
                                       const Table& non_members, const MiaConfig& cfg,
                                       std::span<const std::size_t> member_ids = {},
                                       std::span<const std::size_t> non_member_ids = {});

// Threshold maximizing TPR - FPR over the observed scores, lowest on ties.
double best_threshold(std::span<const double> member_scores,
                      std::span<const double> non_member_scores);

}  // namespace ppbench

#endif  // PPBENCH_MIA_H_
