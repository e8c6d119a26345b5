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

#ifndef PPBENCH_OUTCOME_H_
#define PPBENCH_OUTCOME_H_

#include <cstddef>
#include <span>

#include "json.hpp"

namespace ppbench {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fn = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fn + fp + tn; }
};

// Membership attack summary. advantage = tpr - fpr and
// privacy_gain = 1 - advantage always hold.
struct AttackOutcome {
  double tpr = 0.0;
  double fpr = 0.0;
  double advantage = 0.0;
  // TP / (TP + FP); 0 when the attacker never guessed "member".
  double precision = 0.0;
  double privacy_gain = 1.0;
  std::size_t n_trials = 0;

  static AttackOutcome from_counts(const ConfusionCounts& counts);
  static AttackOutcome from_rates(double tpr, double fpr, double precision, std::size_t n_trials);

  nlohmann::json to_json() const;
};

// Per-field mean; advantage and privacy gain are recomputed from the mean
// rates so the algebraic identities survive averaging.
AttackOutcome average_outcomes(std::span<const AttackOutcome> outcomes);

// Outliers whose attack reached precision >= precision_floor with positive
// advantage. precision_floor must lie in (0.5, 1].
std::size_t count_detected_outliers(std::span<const AttackOutcome> outcomes,
                                    double precision_floor);

}  // namespace ppbench

#endif  // PPBENCH_OUTCOME_H_
