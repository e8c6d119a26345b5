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

#ifndef PPBENCH_SDR_GAME_H_
#define PPBENCH_SDR_GAME_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppbench/features.h"
#include "ppbench/forest.h"
#include "ppbench/outcome.h"
#include "ppbench/random.h"
#include "ppbench/table.h"

namespace ppbench {

// Turns a raw dataset into the published dataset (synthetic or sanitized).
// Must be deterministic in (raw, seed).
using Publisher = std::function<Table(const Table& raw, std::uint64_t seed)>;

// Membership guess (1 = target present) for an observed dataset. public_bit
// is 1 when `observed` is the published output, 0 when it is the raw data.
using Guesser = std::function<int(const Table& observed, int public_bit, Rng& rng)>;

struct SdrGameConfig {
  FeatureSetKind features = FeatureSetKind::kHistograms;
  // Rows drawn from the population before the one inserted record.
  std::size_t seed_size = 1000;
  // Training: this many member and this many non-member shadow datasets.
  // Evaluation: total number of trials.
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int attacker_trees = 50;
  int histogram_bins = 10;
};

// Per-target membership classifier over dataset features: one forest for
// published datasets, one for raw datasets.
struct AttackerModel {
  FeatureSetKind kind = FeatureSetKind::kHistograms;
  ReferenceRanges ranges;
  ForestModel published;
  ForestModel raw;
  double published_training_accuracy = 0.0;
  double raw_training_accuracy = 0.0;
  std::size_t member_examples = 0;
  std::size_t non_member_examples = 0;

  int predict(const Table& observed, int public_bit) const;
  Guesser as_guesser() const;
};

// Raw shadow datasets from attacker training, by label.
struct ShadowSeeds {
  std::vector<Table> members;
  std::vector<Table> non_members;
};

// Shadow datasets: `trials` of (seed_size population rows + target) labelled
// member and `trials` of (seed_size + 1 population rows) labelled
// non-member. Throws kInsufficientPopulation, kInvalidArgument when the
// target is itself in the population. When `shadows` is given the raw shadow
// datasets are copied into it.
AttackerModel train_sdr_attacker(const Table& population, const Record& target,
                                 const Publisher& publisher, const SdrGameConfig& cfg,
                                 ShadowSeeds* shadows = nullptr);

enum class EvaluationMode {
  // Non-member datasets are plain population samples.
  kLegacy,
  // Non-member datasets carry the non-target outlier in the target's place.
  kModified,
};

std::string_view to_string(EvaluationMode mode);

struct GameTranscript {
  std::size_t trial = 0;
  int secret_bit = 0;
  int public_bit = 0;
  // "target", "non_target" or "none".
  std::string inserted;
  int guess = 0;
  std::uint64_t trial_seed = 0;

  nlohmann::json to_json() const;
};

struct GameResult {
  // Trials where the published dataset was shown (public bit 1).
  AttackOutcome published;
  // Trials where the raw dataset was shown (public bit 0).
  AttackOutcome raw;
  AttackOutcome overall;
  Record target;
  std::optional<Record> non_target;
  std::vector<GameTranscript> transcript;
};

// Secret bits are a shuffled half/half assignment; public bits are fair
// coins. Modified mode requires a non-target record distinct from the target.
GameResult evaluate_sdr_game(const Guesser& attacker, const Table& population,
                             const Record& target, const std::optional<Record>& non_target,
                             const Publisher& publisher, const SdrGameConfig& cfg,
                             EvaluationMode mode);

}  // namespace ppbench

#endif  // PPBENCH_SDR_GAME_H_
