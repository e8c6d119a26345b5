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

#ifndef PPBENCH_DP_H_
#define PPBENCH_DP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ppbench/random.h"

namespace ppbench {

// Budget ledger for a run of sequentially composed mechanisms.
struct DpAccount {
  double epsilon_total = 0.0;
  double epsilon_structure = 0.0;
  double epsilon_parameters = 0.0;
};

// Splits epsilon evenly between structure learning and parameter release.
// The parameter share is computed as the remainder so the parts sum exactly.
DpAccount split_budget(double epsilon);

// Laplace(0, scale) by inverse-CDF sampling.
double laplace_noise(Rng& rng, double scale);
double laplace_cdf(double x, double scale);

// Selection probabilities proportional to exp(epsilon * score / (2 * sensitivity)).
std::vector<double> exponential_mechanism_probabilities(std::span<const double> scores,
                                                        double epsilon, double sensitivity);
std::size_t exponential_mechanism_select(std::span<const double> scores, double epsilon,
                                         double sensitivity, Rng& rng);

// Upper bound on how much the empirical mutual information (nats) of a
// discretized table of n rows can move when one row is replaced:
// (2/n) ln((n+1)/2) + ((n-1)/n) ln((n+1)/(n-1)). Falls back to ln 2 for n < 2.
double mutual_information_sensitivity(std::size_t n);

// Replacing one of n rows changes the empirical entropy (nats) of a column by
// at most (1 + ln n) / n.
double entropy_sensitivity(std::size_t n);

}  // namespace ppbench

#endif  // PPBENCH_DP_H_
