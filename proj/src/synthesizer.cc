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

#include "ppbench/synthesizer.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "ppbench/discretize.h"
#include "ppbench/error.h"
#include "ppbench/io.h"
#include "ppbench/random.h"

namespace ppbench {
namespace {

constexpr std::size_t kDenseJointLimit = std::size_t{1} << 22;

std::vector<int> cardinalities(const Table& discrete) {
  std::vector<int> card(discrete.num_columns());
  for (std::size_t c = 0; c < card.size(); ++c) {
    const ColumnSpec& spec = discrete.schema().column(c);
    if (!spec.is_categorical()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "column '" + spec.name + "' is not discrete");
    }
    card[c] = static_cast<int>(spec.categories.size());
  }
  return card;
}

std::size_t config_count(std::span<const std::size_t> parents, const std::vector<int>& card) {
  std::size_t configs = 1;
  for (std::size_t p : parents) configs *= static_cast<std::size_t>(card[p]);
  return configs;
}

std::size_t config_of(const Table& d, std::size_t row, std::span<const std::size_t> parents,
                      const std::vector<int>& card) {
  std::size_t cfg = 0;
  for (std::size_t p : parents) cfg = cfg * card[p] + static_cast<std::size_t>(d.category(row, p));
  return cfg;
}

// Row-major [parent configuration][value] counts.
std::vector<double> joint_counts(const Table& d, std::size_t col,
                                 std::span<const std::size_t> parents,
                                 const std::vector<int>& card) {
  const std::size_t k = static_cast<std::size_t>(card[col]);
  std::vector<double> counts(config_count(parents, card) * k, 0.0);
  for (std::size_t r = 0; r < d.num_rows(); ++r) {
    counts[config_of(d, r, parents, card) * k + static_cast<std::size_t>(d.category(r, col))] += 1.0;
  }
  return counts;
}

// Normalizes each configuration row after adding `pseudo` to every cell.
// Rows with no mass become uniform; returns how many did.
std::size_t normalize_rows(std::vector<double>& table, std::size_t k, double pseudo) {
  std::size_t uniform_rows = 0;
  for (std::size_t off = 0; off < table.size(); off += k) {
    double total = 0.0;
    for (std::size_t v = 0; v < k; ++v) {
      table[off + v] += pseudo;
      total += table[off + v];
    }
    if (total <= 0.0) {
      ++uniform_rows;
      for (std::size_t v = 0; v < k; ++v) table[off + v] = 1.0 / static_cast<double>(k);
    } else {
      for (std::size_t v = 0; v < k; ++v) table[off + v] /= total;
    }
  }
  return uniform_rows;
}

void for_each_subset(const std::vector<std::size_t>& items, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> subset(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = items[idx[i]];
    fn(subset);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == items.size() - size + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Structure {
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> parents;
};

// Picks an index among candidate scores. `is_root` distinguishes the entropy
// step from the mutual-information steps.
using Selector = std::function<std::size_t(const std::vector<double>& scores, bool is_root)>;

Structure learn_structure(const Table& d, int max_parents, const Selector& select) {
  const std::size_t m = d.num_columns();
  Structure s;
  s.parents.resize(m);
  std::vector<double> root_scores(m);
  for (std::size_t c = 0; c < m; ++c) root_scores[c] = entropy(d, c);
  s.order.push_back(select(root_scores, true));

  std::vector<bool> placed(m, false);
  placed[s.order.front()] = true;
  while (s.order.size() < m) {
    std::vector<std::size_t> placed_sorted;
    for (std::size_t c = 0; c < m; ++c) {
      if (placed[c]) placed_sorted.push_back(c);
    }
    const std::size_t size =
        std::min<std::size_t>(static_cast<std::size_t>(max_parents), placed_sorted.size());
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> candidates;
    std::vector<double> scores;
    for (std::size_t x = 0; x < m; ++x) {
      if (placed[x]) continue;
      for_each_subset(placed_sorted, size, [&](const std::vector<std::size_t>& subset) {
        candidates.emplace_back(x, subset);
        scores.push_back(mutual_information(d, x, subset));
      });
    }
    const auto& [child, parent_set] = candidates.at(select(scores, false));
    s.order.push_back(child);
    s.parents[child] = parent_set;
    placed[child] = true;
  }
  return s;
}

std::size_t argmax_lowest(const std::vector<double>& scores) {
  return static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) -
                                  scores.begin());
}

BayesNetModel model_shell(const Table& t, const Discretization& disc) {
  BayesNetModel model;
  model.schema = t.schema();
  model.cardinality = disc.cardinality;
  model.edges = disc.edges;
  model.parents.resize(t.num_columns());
  model.conditionals.resize(t.num_columns());
  return model;
}

}  // namespace

std::string_view to_string(SynthMethod method) {
  switch (method) {
    case SynthMethod::kIndHist: return "IndHist";
    case SynthMethod::kBayNet: return "BayNet";
    case SynthMethod::kPrivBayes: return "PrivBayes";
  }
  return "";
}

SynthMethod parse_synth_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "indhist") return SynthMethod::kIndHist;
  if (lower == "baynet") return SynthMethod::kBayNet;
  if (lower == "privbayes") return SynthMethod::kPrivBayes;
  throw Error(ErrorCode::kConfig, "unknown generator '" + std::string(name) + "'");
}

void GeneratorConfig::validate() const {
  if (bins < 2) throw Error(ErrorCode::kInvalidArgument, "bins must be >= 2");
  if (max_parents < 1) throw Error(ErrorCode::kInvalidArgument, "max_parents must be >= 1");
  if (method == SynthMethod::kPrivBayes && !(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "PrivBayes needs epsilon > 0");
  }
}

std::size_t BayesNetModel::num_configs(std::size_t col) const {
  return config_count(parents.at(col), cardinality);
}

std::span<const double> BayesNetModel::distribution(std::size_t col, std::size_t config) const {
  const auto k = static_cast<std::size_t>(cardinality.at(col));
  return std::span<const double>(conditionals.at(col)).subspan(config * k, k);
}

void BayesNetModel::validate() const {
  const std::size_t m = schema.size();
  if (order.size() != m || parents.size() != m || cardinality.size() != m ||
      conditionals.size() != m || edges.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "model arrays do not match the schema");
  }
  std::vector<bool> seen(m, false);
  for (std::size_t col : order) {
    if (col >= m || seen[col]) throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
    for (std::size_t p : parents[col]) {
      if (p >= m || !seen[p]) {
        throw Error(ErrorCode::kInvalidArgument, "parent does not precede its child");
      }
    }
    seen[col] = true;
    const auto k = static_cast<std::size_t>(cardinality[col]);
    if (k == 0 || conditionals[col].size() != num_configs(col) * k) {
      throw Error(ErrorCode::kInvalidArgument, "conditional table has the wrong size");
    }
    for (std::size_t cfg = 0; cfg < num_configs(col); ++cfg) {
      double total = 0.0;
      for (double p : distribution(col, cfg)) {
        if (!(p >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "negative probability");
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::kInvalidArgument, "conditional does not sum to 1");
      }
    }
  }
}

nlohmann::json BayesNetModel::to_json() const {
  return {{"schema", schema_to_json(schema)}, {"order", order},
          {"parents", parents},               {"cardinality", cardinality},
          {"edges", edges},                   {"conditionals", conditionals}};
}

BayesNetModel BayesNetModel::from_json(const nlohmann::json& j) {
  BayesNetModel model;
  model.schema = schema_from_json(j.at("schema"));
  model.order = j.at("order").get<std::vector<std::size_t>>();
  model.parents = j.at("parents").get<std::vector<std::vector<std::size_t>>>();
  model.cardinality = j.at("cardinality").get<std::vector<int>>();
  model.edges = j.at("edges").get<std::vector<std::vector<double>>>();
  model.conditionals = j.at("conditionals").get<std::vector<std::vector<double>>>();
  model.validate();
  return model;
}

double entropy(const Table& discrete, std::size_t col) {
  if (discrete.empty()) throw Error(ErrorCode::kEmptyInput, "entropy of an empty table");
  const std::vector<int> card = cardinalities(discrete);
  const std::vector<double> counts = joint_counts(discrete, col, {}, card);
  const double n = static_cast<double>(discrete.num_rows());
  double h = 0.0;
  for (double c : counts) {
    if (c > 0) h -= (c / n) * std::log(c / n);
  }
  return h;
}

double mutual_information(const Table& discrete, std::size_t a,
                          std::span<const std::size_t> b) {
  if (discrete.empty()) throw Error(ErrorCode::kEmptyInput, "mutual information of an empty table");
  if (b.empty()) throw Error(ErrorCode::kInvalidArgument, "empty conditioning set");
  if (std::find(b.begin(), b.end(), a) != b.end()) {
    throw Error(ErrorCode::kInvalidArgument, "column appears on both sides");
  }
  const std::vector<int> card = cardinalities(discrete);
  const auto ka = static_cast<std::size_t>(card[a]);
  const std::size_t configs = config_count(b, card);
  const double n = static_cast<double>(discrete.num_rows());

  std::vector<double> pa(ka, 0.0);
  std::unordered_map<std::size_t, double> pb;
  std::unordered_map<std::size_t, double> joint;
  std::vector<double> dense;
  const bool use_dense = configs * ka <= kDenseJointLimit;
  if (use_dense) dense.assign(configs * ka, 0.0);
  std::vector<double> pb_dense(use_dense ? configs : 0, 0.0);
  for (std::size_t r = 0; r < discrete.num_rows(); ++r) {
    const std::size_t x = static_cast<std::size_t>(discrete.category(r, a));
    const std::size_t y = config_of(discrete, r, b, card);
    pa[x] += 1.0;
    if (use_dense) {
      dense[y * ka + x] += 1.0;
      pb_dense[y] += 1.0;
    } else {
      joint[y * ka + x] += 1.0;
      pb[y] += 1.0;
    }
  }
  double mi = 0.0;
  auto term = [&](std::size_t key, double cxy, double cy) {
    const double cx = pa[key % ka];
    mi += (cxy / n) * std::log(cxy * n / (cx * cy));
  };
  if (use_dense) {
    for (std::size_t key = 0; key < dense.size(); ++key) {
      if (dense[key] > 0) term(key, dense[key], pb_dense[key / ka]);
    }
  } else {
    for (const auto& [key, cxy] : joint) term(key, cxy, pb[key / ka]);
  }
  return std::max(mi, 0.0);
}

BayesNetModel fit_baynet(const Table& t, const GeneratorConfig& cfg) {
  cfg.validate();
  const Discretization disc = discretize(t, cfg.bins);
  const Structure s = learn_structure(
      disc.table, cfg.max_parents,
      [](const std::vector<double>& scores, bool) { return argmax_lowest(scores); });
  BayesNetModel model = model_shell(t, disc);
  model.order = s.order;
  model.parents = s.parents;
  for (std::size_t col = 0; col < t.num_columns(); ++col) {
    std::vector<double> table = joint_counts(disc.table, col, model.parents[col], disc.cardinality);
    normalize_rows(table, static_cast<std::size_t>(disc.cardinality[col]), 1.0);
    model.conditionals[col] = std::move(table);
  }
  return model;
}

PrivBayesFit fit_privbayes(const Table& t, const GeneratorConfig& cfg) {
  cfg.validate();
  if (cfg.method != SynthMethod::kPrivBayes) {
    throw Error(ErrorCode::kInvalidArgument, "fit_privbayes needs method PrivBayes");
  }
  const Discretization disc = discretize(t, cfg.bins);
  const std::size_t m = t.num_columns();
  const std::size_t n = t.num_rows();
  PrivBayesFit fit;
  fit.account = split_budget(cfg.epsilon);
  Rng rng(derive_seed(cfg.seed, "privbayes"));

  // Root pick plus one pick per remaining column share the structure budget.
  const double eps_choice = fit.account.epsilon_structure / static_cast<double>(m);
  const double mi_sens = mutual_information_sensitivity(n);
  const double h_sens = entropy_sensitivity(n);
  const Structure s = learn_structure(
      disc.table, cfg.max_parents, [&](const std::vector<double>& scores, bool is_root) {
        return exponential_mechanism_select(scores, eps_choice, is_root ? h_sens : mi_sens, rng);
      });

  BayesNetModel model = model_shell(t, disc);
  model.order = s.order;
  model.parents = s.parents;

  // One noisy joint table per non-root column; the root marginal is read off
  // the second column's joint, whose only parent is the root.
  const std::size_t noisy_tables = std::max<std::size_t>(m - 1, 1);
  const double scale = 2.0 * static_cast<double>(noisy_tables) / fit.account.epsilon_parameters;
  std::size_t uniform_rows = 0;
  std::size_t total_rows = 0;
  auto noisy_joint = [&](std::size_t col) {
    std::vector<double> table = joint_counts(disc.table, col, model.parents[col], disc.cardinality);
    for (double& c : table) c = std::max(0.0, c + laplace_noise(rng, scale));
    return table;
  };
  for (std::size_t i = 1; i < m; ++i) {
    const std::size_t col = model.order[i];
    const auto k = static_cast<std::size_t>(disc.cardinality[col]);
    std::vector<double> table = noisy_joint(col);
    if (i == 1) {
      const std::size_t root = model.order[0];
      const auto kr = static_cast<std::size_t>(disc.cardinality[root]);
      std::vector<double> marginal(kr, 0.0);
      for (std::size_t r = 0; r < kr; ++r) {
        for (std::size_t v = 0; v < k; ++v) marginal[r] += table[r * k + v];
      }
      uniform_rows += normalize_rows(marginal, kr, 0.0);
      ++total_rows;
      model.conditionals[root] = std::move(marginal);
    }
    total_rows += table.size() / k;
    uniform_rows += normalize_rows(table, k, 0.0);
    model.conditionals[col] = std::move(table);
  }
  if (m == 1) {
    const std::size_t root = model.order[0];
    std::vector<double> table = noisy_joint(root);
    total_rows += 1;
    uniform_rows += normalize_rows(table, static_cast<std::size_t>(disc.cardinality[root]), 0.0);
    model.conditionals[root] = std::move(table);
  }
  fit.budget_exhausted = uniform_rows == total_rows;
  fit.model = std::move(model);
  return fit;
}

BayesNetModel fit_indhist(const Table& t, const GeneratorConfig& cfg) {
  cfg.validate();
  const Discretization disc = discretize(t, cfg.bins);
  BayesNetModel model = model_shell(t, disc);
  model.order.resize(t.num_columns());
  std::iota(model.order.begin(), model.order.end(), 0);
  for (std::size_t col = 0; col < t.num_columns(); ++col) {
    std::vector<double> table = joint_counts(disc.table, col, {}, disc.cardinality);
    normalize_rows(table, static_cast<std::size_t>(disc.cardinality[col]), 0.0);
    model.conditionals[col] = std::move(table);
  }
  return model;
}

Table sample_synthetic(const BayesNetModel& model, std::size_t n_out, std::uint64_t seed) {
  const std::size_t m = model.schema.size();
  Rng rng(seed);
  std::vector<std::vector<int>> codes(m, std::vector<int>(n_out, 0));
  std::vector<std::vector<Cell>> columns(m, std::vector<Cell>(n_out, 0.0));
  for (std::size_t r = 0; r < n_out; ++r) {
    for (std::size_t col : model.order) {
      std::size_t cfg = 0;
      for (std::size_t p : model.parents[col]) {
        cfg = cfg * model.cardinality[p] + static_cast<std::size_t>(codes[p][r]);
      }
      const std::span<const double> dist = model.distribution(col, cfg);
      const double u = uniform01(rng);
      double cumulative = 0.0;
      std::size_t value = dist.size();
      for (std::size_t v = 0; v < dist.size(); ++v) {
        cumulative += dist[v];
        if (u < cumulative) {
          value = v;
          break;
        }
      }
      if (value == dist.size()) {
        value = dist.size() - 1;
        while (value > 0 && dist[value] == 0.0) --value;
      }
      codes[col][r] = static_cast<int>(value);
      if (model.schema.column(col).is_categorical()) {
        columns[col][r] = static_cast<double>(value);
      } else {
        const std::vector<double>& edges = model.edges[col];
        const double lo = edges[value];
        const double hi = edges[value + 1];
        columns[col][r] = lo == hi ? lo : std::min(hi, lo + uniform01(rng) * (hi - lo));
      }
    }
  }
  return Table(model.schema, std::move(columns));
}

Table synthesize(const Table& t, const GeneratorConfig& cfg, std::size_t n_out) {
  const std::uint64_t sample_seed = derive_seed(cfg.seed, "sample");
  switch (cfg.method) {
    case SynthMethod::kIndHist:
      return sample_synthetic(fit_indhist(t, cfg), n_out, sample_seed);
    case SynthMethod::kBayNet:
      return sample_synthetic(fit_baynet(t, cfg), n_out, sample_seed);
    case SynthMethod::kPrivBayes:
      return sample_synthetic(fit_privbayes(t, cfg).model, n_out, sample_seed);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator");
}

}  // namespace ppbench
