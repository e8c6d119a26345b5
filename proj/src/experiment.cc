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

#include "ppbench/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "ppbench/diagnostic.h"
#include "ppbench/error.h"
#include "ppbench/forest.h"
#include "ppbench/io.h"
#include "ppbench/metrics.h"
#include "ppbench/outcome.h"
#include "ppbench/random.h"
#include "ppbench/sampling.h"
#include "ppbench/stats.h"

namespace ppbench {
namespace {

using nlohmann::json;

// ---- config parsing ----

template <typename T>
std::vector<T> scalar_or_list(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::kConfig, std::string("sweep is missing '") + key + "'");
  const json& v = j.at(key);
  std::vector<T> out;
  if (v.is_array()) {
    for (const json& x : v) out.push_back(x.get<T>());
  } else {
    out.push_back(v.get<T>());
  }
  if (out.empty()) throw Error(ErrorCode::kConfig, std::string("'") + key + "' is empty");
  return out;
}

std::vector<MethodSpec> parse_sweep(const json& s, double default_cap) {
  const std::string method = s.at("method").get<std::string>();
  std::vector<MethodSpec> cells;
  if (method == "k-anon" || method == "kanon" || method == "nhs") {
    const double cap = s.value("cap_quantile", default_cap);
    for (std::size_t k : scalar_or_list<std::size_t>(s, "k")) {
      MethodSpec spec = MethodSpec::k_anon(k, cap);
      if (s.contains("rare_category_min_count")) {
        spec.anon.rare_category_min_count = s.at("rare_category_min_count").get<std::size_t>();
      }
      spec.anon.validate();
      cells.push_back(spec);
    }
    return cells;
  }
  GeneratorConfig base;
  base.method = parse_synth_method(method);
  base.max_parents = s.value("max_parents", base.max_parents);
  if (base.method == SynthMethod::kPrivBayes) {
    base.bins = s.value("bins", base.bins);
    for (double eps : scalar_or_list<double>(s, "epsilon")) {
      GeneratorConfig g = base;
      g.epsilon = eps;
      g.validate();
      cells.push_back(MethodSpec::synthetic(g));
    }
  } else {
    for (int bins : scalar_or_list<int>(s, "bins")) {
      GeneratorConfig g = base;
      g.bins = bins;
      g.validate();
      cells.push_back(MethodSpec::synthetic(g));
    }
  }
  return cells;
}

// ---- data preparation ----

struct Prepared {
  Table pool;
  Table test;
  std::vector<Record> outliers;  // uncapped, catalog order
};

Prepared prepare(const ExperimentConfig& cfg) {
  const Table population = ingest_csv(cfg.csv_path, cfg.schema_path);
  if (!population.schema().target_index()) {
    throw Error(ErrorCode::kNoTargetColumn, "schema has no target column");
  }

  std::set<std::size_t> outlier_ids;
  std::vector<std::size_t> outlier_order;
  if (cfg.outlier_count > 0) {
    for (const OutlierEntry& e : find_outliers(population, cfg.outlier_count).entries) {
      outlier_ids.insert(e.row);
      outlier_order.push_back(e.row);
    }
  }
  std::vector<std::size_t> rest_ids;
  for (std::size_t r = 0; r < population.num_rows(); ++r) {
    if (!outlier_ids.count(r)) rest_ids.push_back(r);
  }
  const Table rest_raw = population.select_rows(rest_ids);
  const ColumnCaps caps = numeric_caps(rest_raw, cfg.cap_quantile);
  const Table rest = apply_caps(rest_raw, caps);

  Prepared p;
  for (std::size_t r : outlier_order) p.outliers.push_back(population.row(r));

  SamplePlan test_plan;
  test_plan.seed = derive_seed(cfg.master_seed, "test");
  test_plan.size = cfg.test_size;
  const std::vector<std::size_t> test_idx = sample_indices(rest.num_rows(), test_plan);

  SamplePlan pool_plan;
  pool_plan.seed = derive_seed(cfg.master_seed, "pool");
  pool_plan.size = cfg.seed_pool_size == 0 ? rest.num_rows() - test_idx.size() : cfg.seed_pool_size;
  pool_plan.disjoint_from.insert(test_idx.begin(), test_idx.end());
  std::vector<std::size_t> pool_idx = sample_indices(rest.num_rows(), pool_plan);
  std::sort(pool_idx.begin(), pool_idx.end());

  // Pools, test set and outliers are disjoint by original row id.
  std::set<std::size_t> seen(outlier_ids);
  for (const std::vector<std::size_t>* idx : {&test_idx, &std::as_const(pool_idx)}) {
    for (std::size_t i : *idx) {
      if (!seen.insert(rest_ids[i]).second) {
        throw Error(ErrorCode::kDisjointnessViolation,
                    "row " + std::to_string(rest_ids[i]) + " drawn twice");
      }
    }
  }
  p.test = rest.select_rows(test_idx);
  p.pool = rest.select_rows(pool_idx);
  return p;
}

// ---- per-cell work ----

struct Published {
  Table table;
  std::vector<std::size_t> member_ids;  // pool ids of the rows behind `table`
};

Published publish_run(const MethodSpec& spec, const Sample& raw, std::uint64_t seed) {
  if (spec.family == MethodSpec::Family::kKAnon) {
    SanitizeResult res = nhs_sanitize(raw.table, spec.anon);
    Published out{std::move(res.table), {}};
    for (std::size_t r : res.kept_rows) out.member_ids.push_back(raw.indices[r]);
    return out;
  }
  return {make_publisher(spec)(raw.table, seed), raw.indices};
}

ForestConfig forest_config(const ExperimentConfig& cfg, std::uint64_t seed) {
  ForestConfig f;
  f.n_trees = cfg.forest_trees;
  f.max_depth = cfg.forest_max_depth;
  f.seed = seed;
  return f;
}

Sample seed_sample(const ExperimentConfig& cfg, const Table& pool, std::size_t s) {
  SamplePlan plan;
  plan.seed = derive_seed(cfg.master_seed, "seed-sample:" + std::to_string(s));
  plan.size = cfg.seed_size;
  return sample(pool, plan);
}

Sample holdout_sample(const ExperimentConfig& cfg, const Table& pool, const Sample& seed,
                      std::size_t s) {
  SamplePlan plan;
  plan.seed = derive_seed(cfg.master_seed, "holdout:" + std::to_string(s));
  plan.size = cfg.seed_size;
  plan.disjoint_from.insert(seed.indices.begin(), seed.indices.end());
  return sample(pool, plan);
}

struct MiaRun {
  double stat_utility = 0.0;
  double ml_accuracy = 0.0;
  MiaResult mia;
  std::size_t published_rows = 0;
};

MiaRun utility_and_mia(const ExperimentConfig& cfg, const Prepared& data, const MethodSpec& spec,
                       std::uint64_t run_seed, std::size_t s, bool with_utility) {
  const Sample raw = seed_sample(cfg, data.pool, s);
  const Published pub = publish_run(spec, raw, derive_seed(run_seed, "publish"));
  if (pub.table.empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet, "published dataset is empty");
  }
  MiaRun run;
  run.published_rows = pub.table.num_rows();
  const ForestModel victim = fit_forest(pub.table, forest_config(cfg, derive_seed(run_seed, "forest")));
  if (with_utility) {
    run.stat_utility = statistical_utility(raw.table, pub.table).aggregate_stat;
    run.ml_accuracy = accuracy(predict(victim, data.test));
  }
  const Sample out = holdout_sample(cfg, data.pool, raw, s);
  const Table members = spec.family == MethodSpec::Family::kKAnon ? pub.table : raw.table;
  const std::vector<std::size_t>& member_ids =
      spec.family == MethodSpec::Family::kKAnon ? pub.member_ids : raw.indices;
  MiaConfig mcfg;
  mcfg.folds = cfg.mia_folds;
  mcfg.kind = cfg.mia_kind;
  mcfg.seed = derive_seed(run_seed, "mia");
  run.mia = mia_prediction_vector_attack(victim, members, out.table, mcfg, member_ids, out.indices);
  return run;
}

SdrGameConfig sdr_config(const ExperimentConfig& cfg, std::uint64_t cell_seed, std::size_t o,
                         FeatureSetKind kind) {
  SdrGameConfig g;
  g.features = kind;
  g.seed_size = cfg.sdr_seed_size;
  g.trials = cfg.sdr_trials;
  g.seed = derive_seed(cell_seed, "sdr:" + std::to_string(o) + ":" + std::string(to_string(kind)));
  g.attacker_trees = cfg.attacker_trees;
  return g;
}

struct SdrRun {
  GameResult result;
  std::optional<DiagnosticReport> diagnostic;
};

SdrRun sdr_run(const ExperimentConfig& cfg, const Prepared& data, const Publisher& publisher,
               std::uint64_t cell_seed, std::size_t o, FeatureSetKind kind, EvaluationMode mode,
               bool with_diagnostic) {
  SdrGameConfig g = sdr_config(cfg, cell_seed, o, kind);
  ShadowSeeds shadows;
  const AttackerModel attacker = train_sdr_attacker(data.pool, data.outliers[o], publisher, g,
                                                    with_diagnostic ? &shadows : nullptr);
  SdrRun run;
  if (with_diagnostic) {
    run.diagnostic = precondition_diagnostic(shadows.members, shadows.non_members,
                                             cfg.diagnostic_threshold);
  }
  std::optional<Record> non_target;
  if (mode == EvaluationMode::kModified) {
    non_target = data.outliers[(o + 1) % data.outliers.size()];
  }
  SdrGameConfig eval = g;
  eval.trials = 2 * cfg.sdr_trials;
  eval.seed = derive_seed(g.seed, "evaluate");
  run.result = evaluate_sdr_game(attacker.as_guesser(), data.pool, data.outliers[o], non_target,
                                 publisher, eval, mode);
  return run;
}

double pop_sd(const std::vector<double>& v) { return std::sqrt(variance(v)); }

CellResult run_cell(const ExperimentConfig& cfg, const Prepared& data, const MethodSpec& spec) {
  CellResult cell;
  cell.spec = spec;
  cell.method = spec.method_name();
  cell.parameter = spec.parameter();
  cell.cell_seed = derive_seed(cfg.master_seed, spec.cell_id());

  std::vector<double> stat, ml, adv;
  for (std::size_t g = 0; g < cfg.generators; ++g) {
    for (std::size_t s = 0; s < cfg.samples_per_generator; ++s) {
      RunRecord rec;
      rec.generator = g;
      rec.sample = s;
      rec.seed = derive_seed(cell.cell_seed, "run:" + std::to_string(g) + ":" + std::to_string(s));
      const MiaRun run = utility_and_mia(cfg, data, spec, rec.seed, s, true);
      rec.stat_utility = run.stat_utility;
      rec.ml_accuracy = run.ml_accuracy;
      rec.mia_advantage = run.mia.outcome.advantage;
      rec.published_rows = run.published_rows;
      stat.push_back(rec.stat_utility);
      ml.push_back(rec.ml_accuracy);
      adv.push_back(rec.mia_advantage);
      cell.transcript.push_back(json{{"cell", spec.cell_id()},
                                     {"event", "run"},
                                     {"generator", g},
                                     {"sample", s},
                                     {"seed", rec.seed},
                                     {"stat_utility", rec.stat_utility},
                                     {"ml_accuracy", rec.ml_accuracy},
                                     {"mia", run.mia.outcome.to_json()},
                                     {"published_rows", rec.published_rows}}
                                    .dump());
      cell.runs.push_back(rec);
    }
  }
  if (cell.runs.empty()) throw Error(ErrorCode::kEmptyResults, "cell has no runs");
  cell.stat_utility = mean(stat);
  cell.stat_dispersion = pop_sd(stat);
  cell.ml_accuracy = mean(ml);
  cell.ml_dispersion = pop_sd(ml);
  cell.attacker_advantage = mean(adv);

  if (cfg.sdr_trials > 0 && !data.outliers.empty()) {
    cell.sdr_ran = true;
    const Publisher publisher = make_publisher(spec);
    for (std::size_t o = 0; o < data.outliers.size(); ++o) {
      std::optional<AttackOutcome> best;
      for (std::size_t f = 0; f < cfg.feature_sets.size(); ++f) {
        const FeatureSetKind kind = cfg.feature_sets[f];
        const SdrRun run = sdr_run(cfg, data, publisher, cell.cell_seed, o, kind,
                                   EvaluationMode::kModified, f == 0);
        if (run.diagnostic) {
          cell.precondition_flag = cell.precondition_flag || run.diagnostic->flag;
          cell.transcript.push_back(json{{"cell", spec.cell_id()},
                                         {"event", "diagnostic"},
                                         {"outlier", o},
                                         {"report", run.diagnostic->to_json()}}
                                        .dump());
        }
        for (const GameTranscript& t : run.result.transcript) {
          json line = t.to_json();
          line["cell"] = spec.cell_id();
          line["event"] = "sdr_trial";
          line["outlier"] = o;
          line["features"] = std::string(to_string(kind));
          cell.transcript.push_back(line.dump());
        }
        cell.transcript.push_back(json{{"cell", spec.cell_id()},
                                       {"event", "sdr_outcome"},
                                       {"outlier", o},
                                       {"features", std::string(to_string(kind))},
                                       {"published", run.result.published.to_json()},
                                       {"raw", run.result.raw.to_json()}}
                                      .dump());
        if (!best || run.result.published.advantage > best->advantage) {
          best = run.result.published;
        }
      }
      if (best) cell.outlier_outcomes.push_back(*best);
    }
    if (!cell.outlier_outcomes.empty()) {
      cell.privacy_gain = average_outcomes(cell.outlier_outcomes).privacy_gain;
    }
    for (double floor : cfg.precision_floors) {
      cell.outlier_counts.push_back(count_detected_outliers(cell.outlier_outcomes, floor));
    }
  }
  cell.ok = true;
  return cell;
}

template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

std::string floor_column(double floor) {
  return "outlier_count_p" + std::to_string(static_cast<int>(std::lround(floor * 100)));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else if (ch != '\r') {
      out.back() += ch;
    }
  }
  return out;
}

double parse_number(const std::string& text, const std::string& column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kMalformedNumeric, "column " + column + ": '" + text + "' is not a number");
}

}  // namespace

// ---- MethodSpec ----

MethodSpec MethodSpec::k_anon(std::size_t k, double cap_quantile) {
  MethodSpec spec;
  spec.family = Family::kKAnon;
  spec.anon = AnonymizationConfig::for_k(k, cap_quantile);
  return spec;
}

MethodSpec MethodSpec::synthetic(const GeneratorConfig& generator) {
  MethodSpec spec;
  spec.family = Family::kSynthetic;
  spec.generator = generator;
  return spec;
}

std::string MethodSpec::method_name() const {
  if (family == Family::kKAnon) return "k-anon";
  return std::string(to_string(generator.method));
}

std::string MethodSpec::parameter() const {
  if (family == Family::kKAnon) return "k=" + std::to_string(anon.k);
  if (generator.method == SynthMethod::kPrivBayes) return "eps=" + format_double(generator.epsilon);
  return "bins=" + std::to_string(generator.bins);
}

Publisher make_publisher(const MethodSpec& spec) {
  if (spec.family == MethodSpec::Family::kKAnon) {
    const AnonymizationConfig anon = spec.anon;
    return [anon](const Table& raw, std::uint64_t) { return nhs_sanitize(raw, anon).table; };
  }
  const GeneratorConfig base = spec.generator;
  return [base](const Table& raw, std::uint64_t seed) {
    GeneratorConfig g = base;
    g.seed = seed;
    return synthesize(raw, g, raw.num_rows());
  };
}

// ---- ExperimentConfig ----

ExperimentConfig ExperimentConfig::from_json(const json& j, const std::filesystem::path& base_dir) {
  try {
    ExperimentConfig cfg;
    const json& ds = j.at("dataset");
    auto resolve = [&](const std::string& p) {
      std::filesystem::path path(p);
      return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
    };
    cfg.csv_path = resolve(ds.at("csv").get<std::string>());
    cfg.schema_path = resolve(ds.at("schema").get<std::string>());
    cfg.master_seed = j.value("master_seed", cfg.master_seed);
    if (j.contains("sizes")) {
      const json& s = j.at("sizes");
      cfg.seed_pool_size = s.value("seed_pool", cfg.seed_pool_size);
      cfg.seed_size = s.value("seed", cfg.seed_size);
      cfg.test_size = s.value("test", cfg.test_size);
    }
    if (j.contains("trials")) {
      const json& t = j.at("trials");
      cfg.generators = t.value("generators", cfg.generators);
      cfg.samples_per_generator = t.value("samples_per_generator", cfg.samples_per_generator);
    }
    if (j.contains("outliers")) {
      const json& o = j.at("outliers");
      cfg.outlier_count = o.value("count", cfg.outlier_count);
      cfg.cap_quantile = o.value("cap_quantile", cfg.cap_quantile);
    }
    for (const json& sweep : j.at("sweeps")) {
      for (MethodSpec& spec : parse_sweep(sweep, 0.95)) cfg.cells.push_back(spec);
    }
    if (j.contains("utility")) {
      const json& u = j.at("utility");
      cfg.forest_trees = u.value("forest_trees", cfg.forest_trees);
      if (u.contains("max_depth") && !u.at("max_depth").is_null()) {
        cfg.forest_max_depth = u.at("max_depth").get<int>();
      }
    }
    if (j.contains("attack")) {
      const json& a = j.at("attack");
      if (a.contains("feature_sets")) {
        cfg.feature_sets.clear();
        for (const json& f : a.at("feature_sets")) {
          cfg.feature_sets.push_back(parse_feature_set(f.get<std::string>()));
        }
      }
      cfg.mia_folds = a.value("folds", cfg.mia_folds);
      if (a.contains("mia")) cfg.mia_kind = parse_mia_kind(a.at("mia").get<std::string>());
      cfg.sdr_trials = a.value("sdr_trials", cfg.sdr_trials);
      cfg.sdr_seed_size = a.value("sdr_seed_size", cfg.sdr_seed_size);
      cfg.attacker_trees = a.value("attacker_trees", cfg.attacker_trees);
      if (a.contains("precision_floors")) {
        cfg.precision_floors = a.at("precision_floors").get<std::vector<double>>();
      }
      cfg.diagnostic_threshold = a.value("diagnostic_threshold", cfg.diagnostic_threshold);
    }
    cfg.workers = j.value("workers", cfg.workers);

    if (cfg.cells.empty()) throw Error(ErrorCode::kConfig, "no sweep cells");
    if (cfg.feature_sets.empty()) throw Error(ErrorCode::kConfig, "no feature sets");
    if (cfg.seed_size == 0 || cfg.test_size == 0) {
      throw Error(ErrorCode::kConfig, "seed and test sizes must be positive");
    }
    if (cfg.sdr_trials > 0 && cfg.outlier_count == 1) {
      throw Error(ErrorCode::kConfig, "the outlier game needs at least two outliers");
    }
    for (double f : cfg.precision_floors) {
      if (!(f > 0.5 && f <= 1.0)) throw Error(ErrorCode::kConfig, "precision floors lie in (0.5, 1]");
    }
    if (!(cfg.cap_quantile > 0.0 && cfg.cap_quantile <= 1.0)) {
      throw Error(ErrorCode::kConfig, "cap_quantile must lie in (0, 1]");
    }
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("bad experiment config: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    throw Error(ErrorCode::kConfig, e.what());
  }
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
  return from_json(j, path.parent_path());
}

// ---- results ----

std::string ExperimentResults::results_csv() const {
  std::ostringstream out;
  out << "method,parameter,stat_utility,ml_accuracy,attacker_advantage,privacy_gain";
  for (double f : config.precision_floors) out << ',' << floor_column(f);
  out << ",precondition_flag,n_runs,dispersion,master_seed,ml_dispersion,cell_seed,seed_size,"
         "sdr_trials\n";
  for (const CellResult& c : cells) {
    if (!c.ok) continue;
    out << csv_escape(c.method) << ',' << csv_escape(c.parameter) << ','
        << format_double(c.stat_utility) << ',' << format_double(c.ml_accuracy) << ','
        << format_double(c.attacker_advantage) << ','
        << (c.sdr_ran ? format_double(c.privacy_gain) : "");
    for (std::size_t i = 0; i < config.precision_floors.size(); ++i) {
      out << ',' << (c.sdr_ran ? std::to_string(c.outlier_counts[i]) : "");
    }
    out << ',' << (c.sdr_ran ? (c.precondition_flag ? "true" : "false") : "") << ','
        << c.runs.size() << ',' << format_double(c.stat_dispersion) << ',' << config.master_seed
        << ',' << format_double(c.ml_dispersion) << ',' << c.cell_seed << ','
        << config.seed_size << ',' << (c.sdr_ran ? config.sdr_trials : 0) << '\n';
  }
  return out.str();
}

std::string ExperimentResults::transcript_jsonl() const {
  std::string out;
  for (const CellResult& c : cells) {
    for (const std::string& line : c.transcript) out += line + "\n";
  }
  return out;
}

json ExperimentResults::errors_json() const {
  json failed = json::array();
  for (const CellResult& c : cells) {
    if (c.ok) continue;
    failed.push_back({{"method", c.method},
                      {"parameter", c.parameter},
                      {"cell_seed", c.cell_seed},
                      {"error", c.error}});
  }
  return {{"master_seed", config.master_seed}, {"failed_cells", failed}};
}

std::vector<TradeoffPoint> ExperimentResults::tradeoff_points() const {
  return tradeoff_points_from_csv(results_csv());
}

void ExperimentResults::write(const std::filesystem::path& out_dir) const {
  write_file(out_dir / "errors.json", errors_json().dump(2) + "\n");
  const bool any_ok = std::any_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.ok; });
  if (!any_ok) throw Error(ErrorCode::kEmptyResults, "every sweep cell failed");
  write_file(out_dir / "results.csv", results_csv());
  write_file(out_dir / "transcript.jsonl", transcript_jsonl());
  emit_tradeoff(tradeoff_points(), out_dir / "tradeoff.json");
}

ExperimentResults run_experiment(const ExperimentConfig& cfg) {
  const Prepared data = prepare(cfg);
  ExperimentResults results;
  results.config = cfg;
  results.cells.resize(cfg.cells.size());
  parallel_for(cfg.cells.size(), cfg.workers, [&](std::size_t i) {
    const MethodSpec& spec = cfg.cells[i];
    try {
      results.cells[i] = run_cell(cfg, data, spec);
    } catch (const std::exception& e) {
      CellResult failed;
      failed.spec = spec;
      failed.method = spec.method_name();
      failed.parameter = spec.parameter();
      failed.cell_seed = derive_seed(cfg.master_seed, spec.cell_id());
      failed.error = e.what();
      results.cells[i] = std::move(failed);
    }
  });
  return results;
}

std::vector<TradeoffPoint> tradeoff_points_from_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kEmptyResults, "results file is empty");
  const std::vector<std::string> header = split_csv_line(line);
  auto col = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  auto need = [&](const std::string& name) {
    auto c = col(name);
    if (!c) throw Error(ErrorCode::kMissingColumn, "results file lacks column " + name);
    return *c;
  };
  const std::size_t c_method = need("method"), c_param = need("parameter"),
                    c_stat = need("stat_utility"), c_ml = need("ml_accuracy"),
                    c_adv = need("attacker_advantage"), c_runs = need("n_runs"),
                    c_disp = need("dispersion");
  const auto c_ml_disp = col("ml_dispersion");

  std::vector<TradeoffPoint> points;
  std::vector<TradeoffPoint> ml_points;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != header.size()) {
      throw Error(ErrorCode::kArityMismatch, "results row has " + std::to_string(f.size()) +
                                                 " fields, header has " +
                                                 std::to_string(header.size()));
    }
    TradeoffPoint p;
    p.method = f[c_method];
    p.parameter = f[c_param];
    p.privacy = parse_number(f[c_adv], "attacker_advantage");
    p.n_runs = static_cast<std::size_t>(parse_number(f[c_runs], "n_runs"));
    TradeoffPoint m = p;
    p.utility = parse_number(f[c_stat], "stat_utility");
    p.utility_kind = UtilityKind::kStat;
    p.dispersion = parse_number(f[c_disp], "dispersion");
    m.utility = parse_number(f[c_ml], "ml_accuracy");
    m.utility_kind = UtilityKind::kMl;
    m.dispersion = c_ml_disp ? parse_number(f[*c_ml_disp], "ml_dispersion") : 0.0;
    points.push_back(p);
    ml_points.push_back(m);
  }
  if (points.empty()) throw Error(ErrorCode::kEmptyResults, "results file has no rows");
  points.insert(points.end(), ml_points.begin(), ml_points.end());
  return points;
}

// ---- single-game sweeps ----

GameKind parse_game_kind(std::string_view name) {
  if (name == "sdr") return GameKind::kSdrLegacy;
  if (name == "sdr-modified") return GameKind::kSdrModified;
  if (name == "mia") return GameKind::kMia;
  throw Error(ErrorCode::kConfig, "unknown game '" + std::string(name) + "'");
}

std::string_view to_string(GameKind kind) {
  switch (kind) {
    case GameKind::kSdrLegacy: return "sdr";
    case GameKind::kSdrModified: return "sdr-modified";
    case GameKind::kMia: return "mia";
  }
  return "";
}

std::string run_attack_sweep(const ExperimentConfig& cfg, GameKind game) {
  const Prepared data = prepare(cfg);
  if (game != GameKind::kMia) {
    if (data.outliers.empty() || cfg.sdr_trials == 0) {
      throw Error(ErrorCode::kConfig, "the outlier game needs outliers and sdr_trials > 0");
    }
    if (game == GameKind::kSdrModified && data.outliers.size() < 2) {
      throw Error(ErrorCode::kConfig, "the modified game needs at least two outliers");
    }
  }
  std::vector<std::string> blocks(cfg.cells.size());
  parallel_for(cfg.cells.size(), cfg.workers, [&](std::size_t i) {
    const MethodSpec& spec = cfg.cells[i];
    const std::uint64_t cell_seed = derive_seed(cfg.master_seed, spec.cell_id());
    const std::string prefix = csv_escape(spec.method_name()) + "," + csv_escape(spec.parameter()) +
                               "," + std::string(to_string(game)) + ",";
    auto row = [&](const std::string& unit, const std::string& features, const AttackOutcome& o) {
      return prefix + unit + "," + features + "," + format_double(o.tpr) + "," +
             format_double(o.fpr) + "," + format_double(o.advantage) + "," +
             format_double(o.precision) + "," + format_double(o.privacy_gain) + "," +
             std::to_string(o.n_trials) + ",\n";
    };
    std::string& out = blocks[i];
    try {
      if (game == GameKind::kMia) {
        for (std::size_t g = 0; g < cfg.generators; ++g) {
          for (std::size_t s = 0; s < cfg.samples_per_generator; ++s) {
            const std::uint64_t run_seed =
                derive_seed(cell_seed, "run:" + std::to_string(g) + ":" + std::to_string(s));
            const MiaRun run = utility_and_mia(cfg, data, spec, run_seed, s, false);
            out += row("run" + std::to_string(g) + "." + std::to_string(s),
                       std::string(to_string(cfg.mia_kind)), run.mia.outcome);
          }
        }
      } else {
        const Publisher publisher = make_publisher(spec);
        const EvaluationMode mode =
            game == GameKind::kSdrModified ? EvaluationMode::kModified : EvaluationMode::kLegacy;
        for (std::size_t o = 0; o < data.outliers.size(); ++o) {
          for (FeatureSetKind kind : cfg.feature_sets) {
            const SdrRun run = sdr_run(cfg, data, publisher, cell_seed, o, kind, mode, false);
            out += row("outlier" + std::to_string(o), std::string(to_string(kind)),
                       run.result.published);
          }
        }
      }
    } catch (const std::exception& e) {
      out = prefix + ",,,,,,,," + csv_escape(e.what()) + "\n";
    }
  });
  std::string csv =
      "method,parameter,game,unit,features,tpr,fpr,advantage,precision,privacy_gain,n_trials,"
      "error\n";
  for (const std::string& b : blocks) csv += b;
  return csv;
}

}  // namespace ppbench
