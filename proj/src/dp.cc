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

#include "ppbench/dp.h"

#include <algorithm>
#include <cmath>

#include "ppbench/error.h"

namespace ppbench {

DpAccount split_budget(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive and finite");
  }
  DpAccount account;
  account.epsilon_total = epsilon;
  account.epsilon_structure = epsilon / 2.0;
  account.epsilon_parameters = epsilon - account.epsilon_structure;
  return account;
}

double laplace_noise(Rng& rng, double scale) {
  if (!(scale >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "negative Laplace scale");
  double u;
  do {
    u = uniform01(rng) - 0.5;
  } while (u == -0.5);
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

double laplace_cdf(double x, double scale) {
  if (x < 0) return 0.5 * std::exp(x / scale);
  return 1.0 - 0.5 * std::exp(-x / scale);
}

std::vector<double> exponential_mechanism_probabilities(std::span<const double> scores,
                                                        double epsilon, double sensitivity) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyInput, "no candidates");
  if (!(epsilon > 0.0) || !(sensitivity > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon and sensitivity must be positive");
  }
  const double best = *std::max_element(scores.begin(), scores.end());
  std::vector<double> weights(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    weights[i] = std::exp(epsilon * (scores[i] - best) / (2.0 * sensitivity));
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return weights;
}

std::size_t exponential_mechanism_select(std::span<const double> scores, double epsilon,
                                         double sensitivity, Rng& rng) {
  const std::vector<double> p = exponential_mechanism_probabilities(scores, epsilon, sensitivity);
  const double u = uniform01(rng);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cumulative += p[i];
    if (u < cumulative) return i;
  }
  // Rounding left u above the final cumulative sum; take the last candidate
  // with non-zero mass.
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > 0.0) return i;
  }
  return p.size() - 1;
}

double mutual_information_sensitivity(std::size_t n) {
  if (n < 2) return std::log(2.0);
  const double nd = static_cast<double>(n);
  return (2.0 / nd) * std::log((nd + 1.0) / 2.0) +
         ((nd - 1.0) / nd) * std::log((nd + 1.0) / (nd - 1.0));
}

double entropy_sensitivity(std::size_t n) {
  if (n < 2) return std::log(2.0);
  const double nd = static_cast<double>(n);
  return (1.0 + std::log(nd)) / nd;
}

}  // namespace ppbench
