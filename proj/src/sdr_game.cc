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

#include "ppbench/sdr_game.h"

#include <algorithm>
#include <memory>

#include "ppbench/error.h"
#include "ppbench/sampling.h"

namespace ppbench {
namespace {

bool contains_record(const Table& t, const Record& r) {
  for (std::size_t row = 0; row < t.num_rows(); ++row) {
    bool same = true;
    for (std::size_t c = 0; c < t.num_columns() && same; ++c) same = t.at(row, c) == r[c];
    if (same) return true;
  }
  return false;
}

Table draw_rows(const Table& population, std::size_t size, std::uint64_t seed) {
  SamplePlan plan;
  plan.seed = seed;
  plan.size = size;
  return sample(population, plan).table;
}

FeatureMatrix to_matrix(const std::vector<FeatureVector>& vectors) {
  FeatureMatrix x;
  const std::size_t p = vectors.front().values.size();
  x.columns.assign(p, std::vector<double>(vectors.size(), 0.0));
  for (std::size_t f = 0; f < p; ++f) {
    x.names.push_back("f" + std::to_string(f));
    x.categorical.push_back(false);
    x.cardinality.push_back(0);
    for (std::size_t i = 0; i < vectors.size(); ++i) x.columns[f][i] = vectors[i].values.at(f);
  }
  return x;
}

}  // namespace

std::string_view to_string(EvaluationMode mode) {
  return mode == EvaluationMode::kLegacy ? "legacy" : "modified";
}

int AttackerModel::predict(const Table& observed, int public_bit) const {
  const FeatureVector fv = extract_features(observed, kind, ranges);
  const ForestModel& model = public_bit == 1 ? published : raw;
  return model.predict_row(fv.values).predicted_class;
}

Guesser AttackerModel::as_guesser() const {
  auto self = std::make_shared<const AttackerModel>(*this);
  return [self](const Table& observed, int public_bit, Rng&) {
    return self->predict(observed, public_bit);
  };
}

AttackerModel train_sdr_attacker(const Table& population, const Record& target,
                                 const Publisher& publisher, const SdrGameConfig& cfg,
                                 ShadowSeeds* shadows) {
  if (target.size() != population.num_columns()) {
    throw Error(ErrorCode::kArityMismatch, "target record does not match the schema");
  }
  if (cfg.trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  if (population.num_rows() < cfg.seed_size + 1) {
    throw Error(ErrorCode::kInsufficientPopulation,
                "population has " + std::to_string(population.num_rows()) + " rows, need " +
                    std::to_string(cfg.seed_size + 1));
  }
  if (contains_record(population, target)) {
    throw Error(ErrorCode::kInvalidArgument, "target record is part of the shadow pool");
  }

  AttackerModel attacker;
  attacker.kind = cfg.features;
  const std::vector<Record> extra{target};
  attacker.ranges = ReferenceRanges::from_population(population, cfg.histogram_bins, extra);

  std::vector<FeatureVector> published_features;
  std::vector<FeatureVector> raw_features;
  std::vector<int> labels;
  for (std::size_t i = 0; i < 2 * cfg.trials; ++i) {
    const int member = i < cfg.trials ? 1 : 0;
    const std::uint64_t shadow_seed = derive_seed(cfg.seed, "shadow:" + std::to_string(i));
    Table raw = member ? draw_rows(population, cfg.seed_size, shadow_seed).with_row(target)
                       : draw_rows(population, cfg.seed_size + 1, shadow_seed);
    const Table published = publisher(raw, derive_seed(shadow_seed, "publish"));
    published_features.push_back(extract_features(published, cfg.features, attacker.ranges));
    raw_features.push_back(extract_features(raw, cfg.features, attacker.ranges));
    labels.push_back(member);
    if (shadows) (member ? shadows->members : shadows->non_members).push_back(std::move(raw));
  }
  attacker.member_examples = cfg.trials;
  attacker.non_member_examples = cfg.trials;

  ForestConfig forest;
  forest.n_trees = cfg.attacker_trees;
  forest.seed = derive_seed(cfg.seed, "attacker");
  const FeatureMatrix px = to_matrix(published_features);
  const FeatureMatrix rx = to_matrix(raw_features);
  attacker.published = fit_forest(px, labels, 2, forest);
  attacker.raw = fit_forest(rx, labels, 2, forest);

  auto training_accuracy = [&](const ForestModel& model, const FeatureMatrix& x) {
    std::vector<PredictionVector> preds = predict(model, x);
    for (std::size_t i = 0; i < preds.size(); ++i) preds[i].true_label = labels[i];
    return accuracy(preds);
  };
  attacker.published_training_accuracy = training_accuracy(attacker.published, px);
  attacker.raw_training_accuracy = training_accuracy(attacker.raw, rx);
  return attacker;
}

nlohmann::json GameTranscript::to_json() const {
  return {{"trial", trial},   {"secret_bit", secret_bit}, {"public_bit", public_bit},
          {"inserted", inserted}, {"guess", guess},       {"trial_seed", trial_seed}};
}

GameResult evaluate_sdr_game(const Guesser& attacker, const Table& population,
                             const Record& target, const std::optional<Record>& non_target,
                             const Publisher& publisher, const SdrGameConfig& cfg,
                             EvaluationMode mode) {
  if (target.size() != population.num_columns()) {
    throw Error(ErrorCode::kArityMismatch, "target record does not match the schema");
  }
  if (mode == EvaluationMode::kModified) {
    if (!non_target) throw Error(ErrorCode::kInvalidArgument, "modified game needs a non-target record");
    if (*non_target == target) {
      throw Error(ErrorCode::kInvalidArgument, "non-target record equals the target");
    }
  }
  if (population.num_rows() < cfg.seed_size + 1) {
    throw Error(ErrorCode::kInsufficientPopulation, "population too small for the seed size");
  }

  GameResult result;
  result.target = target;
  result.non_target = non_target;
  Rng bits(derive_seed(cfg.seed, "bits"));
  std::vector<int> secret(cfg.trials, 0);
  std::fill(secret.begin(), secret.begin() + static_cast<std::ptrdiff_t>(cfg.trials / 2), 1);
  std::shuffle(secret.begin(), secret.end(), bits);

  ConfusionCounts published_counts;
  ConfusionCounts raw_counts;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    GameTranscript t;
    t.trial = i;
    t.trial_seed = derive_seed(cfg.seed, "trial:" + std::to_string(i));
    t.secret_bit = secret[i];
    t.public_bit = static_cast<int>(bits() & 1U);

    Table raw;
    if (t.secret_bit == 1) {
      raw = draw_rows(population, cfg.seed_size, t.trial_seed).with_row(target);
      t.inserted = "target";
    } else if (mode == EvaluationMode::kModified) {
      raw = draw_rows(population, cfg.seed_size, t.trial_seed).with_row(*non_target);
      t.inserted = "non_target";
    } else {
      raw = draw_rows(population, cfg.seed_size + 1, t.trial_seed);
      t.inserted = "none";
    }
    Rng guess_rng(derive_seed(t.trial_seed, "guess"));
    if (t.public_bit == 1) {
      const Table published = publisher(raw, derive_seed(t.trial_seed, "publish"));
      t.guess = attacker(published, 1, guess_rng);
    } else {
      t.guess = attacker(raw, 0, guess_rng);
    }
    if (t.guess != 0 && t.guess != 1) throw Error(ErrorCode::kInvalidArgument, "guess must be 0 or 1");

    ConfusionCounts& counts = t.public_bit == 1 ? published_counts : raw_counts;
    if (t.secret_bit == 1) {
      (t.guess == 1 ? counts.tp : counts.fn) += 1;
    } else {
      (t.guess == 1 ? counts.fp : counts.tn) += 1;
    }
    result.transcript.push_back(std::move(t));
  }
  result.published = AttackOutcome::from_counts(published_counts);
  result.raw = AttackOutcome::from_counts(raw_counts);
  ConfusionCounts all{published_counts.tp + raw_counts.tp, published_counts.fn + raw_counts.fn,
                      published_counts.fp + raw_counts.fp, published_counts.tn + raw_counts.tn};
  result.overall = AttackOutcome::from_counts(all);
  return result;
}

}  // namespace ppbench
