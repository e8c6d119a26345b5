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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ppbench/error.h"

namespace ppbench {
namespace {

TEST(BudgetTest, ComponentsSumExactly) {
  for (double eps : {0.1, 1.0, 10.0, 15.0, 0.3, 1e-7, 1e9}) {
    const DpAccount a = split_budget(eps);
    EXPECT_EQ(a.epsilon_structure + a.epsilon_parameters, eps);
    EXPECT_EQ(a.epsilon_total, eps);
    EXPECT_NEAR(a.epsilon_structure, eps / 2, eps * 1e-15);
  }
}

TEST(LaplaceTest, CdfClosedForm) {
  EXPECT_DOUBLE_EQ(laplace_cdf(0.0, 2.0), 0.5);
  EXPECT_NEAR(laplace_cdf(1.0, 1.0), 1 - 0.5 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(laplace_cdf(-3.0, 2.0), 0.5 * std::exp(-1.5), 1e-15);
}

TEST(LaplaceTest, MomentsAndShape) {
  Rng rng(17);
  const double b = 1.7;
  std::vector<double> x(100000);
  for (double& v : x) v = laplace_noise(rng, b);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= x.size();
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= x.size();
  EXPECT_NEAR(mean, 0.0, 0.05);
  EXPECT_NEAR(var, 2 * b * b, 0.05 * 2 * b * b);
  std::sort(x.begin(), x.end());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = laplace_cdf(x[i], b);
    d = std::max({d, std::abs(f - double(i) / x.size()), std::abs(f - double(i + 1) / x.size())});
  }
  EXPECT_LT(d, 0.01);
}

TEST(ExponentialMechanismTest, ProbabilitiesFollowFormula) {
  const std::vector<double> scores{1.0, 0.0, 0.5};
  const auto p = exponential_mechanism_probabilities(scores, 2.0, 0.5);
  double z = 0.0;
  for (double s : scores) z += std::exp(2.0 * s / (2 * 0.5));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(p[i], std::exp(2.0 * scores[i]) / z, 1e-12);
}

TEST(ExponentialMechanismTest, HugeScoresStayFinite) {
  const std::vector<double> scores{1000.0, 999.0};
  const auto p = exponential_mechanism_probabilities(scores, 1e9, 1.0);
  EXPECT_EQ(p[0], 1.0);
  EXPECT_EQ(p[1], 0.0);
  Rng rng(1);
  EXPECT_EQ(exponential_mechanism_select(scores, 1e9, 1.0, rng), 0u);
}

TEST(ExponentialMechanismTest, SelectionRatio) {
  const std::vector<double> scores{0.8, 0.3};
  const double eps = 1.2, delta = 0.4;
  Rng rng(23);
  std::size_t first = 0;
  const std::size_t trials = 100000;
  for (std::size_t i = 0; i < trials; ++i) first += exponential_mechanism_select(scores, eps, delta, rng) == 0;
  const double ratio = double(first) / double(trials - first);
  const double expected = std::exp(eps * (scores[0] - scores[1]) / (2 * delta));
  EXPECT_NEAR(ratio / expected, 1.0, 0.02);
}

TEST(ExponentialMechanismTest, Errors) {
  const std::vector<double> none;
  EXPECT_THROW(exponential_mechanism_probabilities(none, 1.0, 1.0), Error);
  const std::vector<double> one{1.0};
  EXPECT_THROW(exponential_mechanism_probabilities(one, 0.0, 1.0), Error);
}

TEST(SensitivityTest, MutualInformationBound) {
  const double n = 100;
  EXPECT_NEAR(mutual_information_sensitivity(100),
              (2 / n) * std::log((n + 1) / 2) + ((n - 1) / n) * std::log((n + 1) / (n - 1)), 1e-15);
  EXPECT_EQ(mutual_information_sensitivity(1), std::log(2.0));
  EXPECT_GT(mutual_information_sensitivity(10), mutual_information_sensitivity(1000));
}

}  // namespace
}  // namespace ppbench
