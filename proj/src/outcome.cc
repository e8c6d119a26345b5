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

#include "ppbench/outcome.h"

#include "ppbench/error.h"

namespace ppbench {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

AttackOutcome AttackOutcome::from_counts(const ConfusionCounts& c) {
  return from_rates(ratio(c.tp, c.tp + c.fn), ratio(c.fp, c.fp + c.tn), ratio(c.tp, c.tp + c.fp),
                    c.total());
}

AttackOutcome AttackOutcome::from_rates(double tpr, double fpr, double precision,
                                        std::size_t n_trials) {
  AttackOutcome o;
  o.tpr = tpr;
  o.fpr = fpr;
  o.advantage = tpr - fpr;
  o.precision = precision;
  o.privacy_gain = 1.0 - o.advantage;
  o.n_trials = n_trials;
  return o;
}

nlohmann::json AttackOutcome::to_json() const {
  return {{"tpr", tpr},           {"fpr", fpr},
          {"advantage", advantage}, {"precision", precision},
          {"privacy_gain", privacy_gain}, {"n_trials", n_trials}};
}

AttackOutcome average_outcomes(std::span<const AttackOutcome> outcomes) {
  if (outcomes.empty()) throw Error(ErrorCode::kEmptyInput, "no outcomes to average");
  double tpr = 0.0;
  double fpr = 0.0;
  double precision = 0.0;
  std::size_t trials = 0;
  for (const AttackOutcome& o : outcomes) {
    tpr += o.tpr;
    fpr += o.fpr;
    precision += o.precision;
    trials += o.n_trials;
  }
  const double n = static_cast<double>(outcomes.size());
  return AttackOutcome::from_rates(tpr / n, fpr / n, precision / n, trials);
}

std::size_t count_detected_outliers(std::span<const AttackOutcome> outcomes,
                                    double precision_floor) {
  if (!(precision_floor > 0.5 && precision_floor <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "precision floor must lie in (0.5, 1]");
  }
  std::size_t count = 0;
  for (const AttackOutcome& o : outcomes) {
    if (o.precision >= precision_floor && o.advantage > 0.0) ++count;
  }
  return count;
}

}  // namespace ppbench
