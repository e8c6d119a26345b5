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

#ifndef PPBENCH_SYNTHESIZER_H_
#define PPBENCH_SYNTHESIZER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppbench/dp.h"
#include "ppbench/table.h"

namespace ppbench {

enum class SynthMethod { kIndHist, kBayNet, kPrivBayes };

std::string_view to_string(SynthMethod method);
SynthMethod parse_synth_method(std::string_view name);

struct GeneratorConfig {
  SynthMethod method = SynthMethod::kBayNet;
  int bins = 10;
  double epsilon = 1.0;  // PrivBayes only
  int max_parents = 2;
  std::uint64_t seed = 0;

  void validate() const;
};

// Discrete Bayesian network over the (binned) columns of a schema. Parents
// always precede their child in `order`, so the graph is acyclic.
struct BayesNetModel {
  Schema schema;
  std::vector<std::size_t> order;
  // Indexed by column.
  std::vector<std::vector<std::size_t>> parents;
  std::vector<int> cardinality;
  std::vector<std::vector<double>> edges;
  // Indexed by column; row-major [parent configuration][value]. Parent
  // configurations are mixed-radix over `parents[col]` with the first parent
  // most significant.
  std::vector<std::vector<double>> conditionals;

  std::size_t num_configs(std::size_t col) const;
  std::span<const double> distribution(std::size_t col, std::size_t config) const;
  // Throws kInvalidArgument when a structural or probability invariant fails.
  void validate() const;

  nlohmann::json to_json() const;
  static BayesNetModel from_json(const nlohmann::json& j);
};

// Empirical entropy and mutual information (nats) over categorical columns.
double entropy(const Table& discrete, std::size_t col);
double mutual_information(const Table& discrete, std::size_t a,
                          std::span<const std::size_t> b);

// Greedy structure: highest-entropy column first, then repeatedly the
// (column, parent set) pair of highest mutual information. Conditional tables
// use add-one smoothing.
BayesNetModel fit_baynet(const Table& t, const GeneratorConfig& cfg);

struct PrivBayesFit {
  BayesNetModel model;
  DpAccount account;
  // Every noisy conditional collapsed to zero mass and was replaced by the
  // uniform distribution.
  bool budget_exhausted = false;
};

// Differentially private variant: each structure choice goes through the
// exponential mechanism and the conditional tables come from Laplace-noised
// joint counts.
PrivBayesFit fit_privbayes(const Table& t, const GeneratorConfig& cfg);

// Independent per-column histograms (a network without edges).
BayesNetModel fit_indhist(const Table& t, const GeneratorConfig& cfg);

// Ancestral sampling; binned numeric cells are drawn uniformly within their
// bin's edges.
Table sample_synthetic(const BayesNetModel& model, std::size_t n_out, std::uint64_t seed);

// Fit with cfg.method and sample n_out rows; deterministic in (t, cfg).
Table synthesize(const Table& t, const GeneratorConfig& cfg, std::size_t n_out);

}  // namespace ppbench

#endif  // PPBENCH_SYNTHESIZER_H_
