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

// Command-line front end: run, tradeoff, verify-kanon, attack.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ppbench/anonymizer.h"
#include "ppbench/error.h"
#include "ppbench/experiment.h"
#include "ppbench/io.h"
#include "ppbench/tradeoff.h"

namespace {

using ppbench::Error;
using ppbench::ExperimentConfig;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::filesystem::path out_dir = "out";
};

ExperimentConfig load_config(const std::string& path, const Overrides& o) {
  ExperimentConfig cfg = ExperimentConfig::load(path);
  if (o.seed) cfg.master_seed = *o.seed;
  if (o.workers) cfg.workers = *o.workers;
  return cfg;
}

int cmd_run(const std::string& config_path, const Overrides& o) {
  const ExperimentConfig cfg = load_config(config_path, o);
  const ppbench::ExperimentResults results = ppbench::run_experiment(cfg);
  results.write(o.out_dir);
  std::size_t failed = 0;
  for (const auto& c : results.cells) {
    if (!c.ok) {
      ++failed;
      std::cerr << "cell " << c.method << " " << c.parameter << " failed: " << c.error << "\n";
    }
  }
  std::cout << "wrote " << (o.out_dir / "results.csv").string() << " ("
            << results.cells.size() - failed << " cells, " << failed << " failed)\n";
  return 0;
}

int cmd_tradeoff(const std::string& results_path, const std::string& out) {
  const auto points = ppbench::tradeoff_points_from_csv(ppbench::read_file(results_path));
  ppbench::emit_tradeoff(points, out);
  std::cout << "wrote " << out << " (" << points.size() << " points)\n";
  return 0;
}

int cmd_verify(const std::string& csv, const std::string& schema, std::size_t k) {
  const ppbench::Table t = ppbench::ingest_csv(csv, schema);
  const ppbench::KAnonymityReport r = ppbench::verify_k_anonymity(t, k);
  std::cout << (r.k_anonymous ? "k-anonymous" : "NOT k-anonymous") << " k=" << k
            << " rows=" << t.num_rows() << " violating_classes=" << r.violations.size() << "\n";
  return r.k_anonymous ? 0 : 1;
}

int cmd_attack(const std::string& config_path, const std::string& game, const Overrides& o) {
  const ExperimentConfig cfg = load_config(config_path, o);
  const ppbench::GameKind kind = ppbench::parse_game_kind(game);
  const std::string csv = ppbench::run_attack_sweep(cfg, kind);
  const std::filesystem::path out = o.out_dir / ("attack_" + game + ".csv");
  ppbench::write_file(out, csv);
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-utility benchmark for tabular data release"};
  app.require_subcommand(1);

  Overrides overrides;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string out_dir = "out";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Master seed (overrides the config)");
    sub->add_option("--workers", workers, "Worker threads (overrides the config)");
    sub->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  };

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment sweep");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  add_common(run);

  std::string results_path, tradeoff_out;
  auto* tradeoff = app.add_subcommand("tradeoff", "Emit trade-off JSON from a results CSV");
  tradeoff->add_option("results", results_path, "results.csv")->required();
  tradeoff->add_option("--out", tradeoff_out, "Output JSON path")->required();

  std::string csv_path, schema_path;
  std::size_t k = 0;
  auto* verify = app.add_subcommand("verify-kanon", "Check k-anonymity of a CSV");
  verify->add_option("csv", csv_path)->required();
  verify->add_option("schema", schema_path)->required();
  verify->add_option("--k", k, "Minimum class size")->required()->check(CLI::PositiveNumber);

  std::string game;
  auto* attack = app.add_subcommand("attack", "Run one privacy game over every sweep cell");
  attack->add_option("config", config_path, "Experiment config (JSON)")->required();
  attack->add_option("--game", game, "Game to play")
      ->required()
      ->check(CLI::IsMember({"sdr", "sdr-modified", "mia"}));
  add_common(attack);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {run, attack}) {
    if (sub->parsed()) {
      if (sub->count("--seed")) overrides.seed = seed;
      if (sub->count("--workers")) overrides.workers = workers;
      overrides.out_dir = out_dir;
    }
  }

  try {
    if (run->parsed()) return cmd_run(config_path, overrides);
    if (tradeoff->parsed()) return cmd_tradeoff(results_path, tradeoff_out);
    if (verify->parsed()) return cmd_verify(csv_path, schema_path, k);
    if (attack->parsed()) return cmd_attack(config_path, game, overrides);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
