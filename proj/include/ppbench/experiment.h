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

#ifndef PPBENCH_EXPERIMENT_H_
#define PPBENCH_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppbench/anonymizer.h"
#include "ppbench/features.h"
#include "ppbench/mia.h"
#include "ppbench/sdr_game.h"
#include "ppbench/synthesizer.h"
#include "ppbench/table.h"
#include "ppbench/tradeoff.h"

namespace ppbench {

// One sweep cell: a sanitization method with a fixed parameter.
struct MethodSpec {
  enum class Family { kKAnon, kSynthetic };

  Family family = Family::kKAnon;
  AnonymizationConfig anon;
  GeneratorConfig generator;  // seed is ignored; cells derive their own

  static MethodSpec k_anon(std::size_t k, double cap_quantile = 0.95);
  static MethodSpec synthetic(const GeneratorConfig& generator);

  // "k-anon", "IndHist", "BayNet", "PrivBayes".
  std::string method_name() const;
  // "k=10", "bins=5", "eps=1".
  std::string parameter() const;
  std::string cell_id() const { return method_name() + "/" + parameter(); }
};

Publisher make_publisher(const MethodSpec& spec);

struct ExperimentConfig {
  std::filesystem::path csv_path;
  std::filesystem::path schema_path;
  std::uint64_t master_seed = 0;

  std::size_t seed_pool_size = 10000;  // 0: every non-test row
  std::size_t seed_size = 1000;
  std::size_t test_size = 5000;

  std::size_t generators = 5;
  std::size_t samples_per_generator = 5;

  std::size_t outlier_count = 5;
  double cap_quantile = 0.95;

  std::vector<MethodSpec> cells;

  int forest_trees = 100;
  std::optional<int> forest_max_depth;

  std::vector<FeatureSetKind> feature_sets{FeatureSetKind::kHistograms};
  std::size_t mia_folds = 5;
  MiaAttackKind mia_kind = MiaAttackKind::kThreshold;
  // Shadow datasets per label for attacker training; evaluation runs twice
  // as many trials. 0 skips the outlier game.
  std::size_t sdr_trials = 100;
  std::size_t sdr_seed_size = 1000;
  int attacker_trees = 50;
  std::vector<double> precision_floors{0.6, 0.8};
  double diagnostic_threshold = 0.2;

  std::size_t workers = 1;

  // Relative dataset paths resolve against `base_dir`. Throws kConfig.
  static ExperimentConfig from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir = {});
  static ExperimentConfig load(const std::filesystem::path& path);
};

// Per-run values for one cell; these are what the aggregates average.
struct RunRecord {
  std::size_t generator = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  double stat_utility = 0.0;
  double ml_accuracy = 0.0;
  double mia_advantage = 0.0;
  std::size_t published_rows = 0;
};

struct CellResult {
  MethodSpec spec;
  std::string method;
  std::string parameter;
  std::uint64_t cell_seed = 0;
  bool ok = false;
  std::string error;

  std::vector<RunRecord> runs;
  double stat_utility = 0.0;
  double stat_dispersion = 0.0;
  double ml_accuracy = 0.0;
  double ml_dispersion = 0.0;
  double attacker_advantage = 0.0;

  bool sdr_ran = false;
  // Per outlier: the feature set with the highest advantage.
  std::vector<AttackOutcome> outlier_outcomes;
  double privacy_gain = 1.0;
  std::vector<std::size_t> outlier_counts;  // one per precision floor
  bool precondition_flag = false;

  std::vector<std::string> transcript;  // JSON lines
};

struct ExperimentResults {
  ExperimentConfig config;
  std::vector<CellResult> cells;

  std::string results_csv() const;
  std::string transcript_jsonl() const;
  nlohmann::json errors_json() const;
  std::vector<TradeoffPoint> tradeoff_points() const;

  // results.csv, transcript.jsonl, tradeoff.json, errors.json. Throws
  // kEmptyResults when no cell succeeded (after writing errors.json).
  void write(const std::filesystem::path& out_dir) const;
};

// A cell that throws is recorded with its error and the sweep continues.
ExperimentResults run_experiment(const ExperimentConfig& cfg);

// Trade-off points rebuilt from a results CSV.
std::vector<TradeoffPoint> tradeoff_points_from_csv(const std::string& csv_text);

enum class GameKind { kSdrLegacy, kSdrModified, kMia };

GameKind parse_game_kind(std::string_view name);  // "sdr", "sdr-modified", "mia"
std::string_view to_string(GameKind kind);

// Runs a single attack for every cell and returns a CSV with one row per
// (cell, outlier, feature set) or, for the MIA, per (cell, run).
std::string run_attack_sweep(const ExperimentConfig& cfg, GameKind game);

}  // namespace ppbench

#endif  // PPBENCH_EXPERIMENT_H_
