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

#include "ppbench/anonymizer.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "ppbench/error.h"
#include "ppbench/stats.h"

namespace ppbench {

void AnonymizationConfig::validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(cap_quantile > 0.0 && cap_quantile <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "cap_quantile must be in (0, 1]");
  }
  if (rare_category_min_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "rare_category_min_count must be >= 1");
  }
}

std::vector<EquivalenceClass> equivalence_classes(const Table& t) {
  const std::vector<std::size_t> qids = t.schema().indices_with(Role::kQid);
  if (qids.empty()) throw Error(ErrorCode::kNoQidColumns, "schema has no QID columns");
  std::map<std::vector<Cell>, std::vector<std::size_t>> groups;
  std::vector<Cell> key(qids.size());
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    for (std::size_t j = 0; j < qids.size(); ++j) key[j] = t.at(r, qids[j]);
    groups[key].push_back(r);
  }
  std::vector<EquivalenceClass> out;
  out.reserve(groups.size());
  for (auto& [sig, members] : groups) out.push_back({sig, std::move(members)});
  return out;
}

SanitizeResult nhs_sanitize(const Table& t, const AnonymizationConfig& cfg) {
  cfg.validate();
  if (t.schema().indices_with(Role::kQid).empty()) {
    throw Error(ErrorCode::kNoQidColumns, "schema has no QID columns");
  }
  SanitizeResult result{Table(t.schema()), {}, {}, false};
  result.log.input_rows = t.num_rows();
  if (t.empty()) {
    result.table = t;
    result.empty_result = true;
    return result;
  }

  const Table capped = cap_numeric(t, cfg.cap_quantile);
  result.log.stages.push_back({"cap", 0, "numeric values capped at quantile " +
                                             std::to_string(cfg.cap_quantile)});

  // Rare-value counts are taken once, on the capped table.
  const std::vector<std::size_t> cats = t.schema().indices_of(ColumnKind::kCategorical);
  std::vector<std::vector<std::size_t>> counts(t.num_columns());
  for (std::size_t c : cats) {
    counts[c].assign(t.schema().column(c).categories.size(), 0);
    for (std::size_t r = 0; r < capped.num_rows(); ++r) ++counts[c][capped.category(r, c)];
  }
  std::vector<std::size_t> common_rows;
  for (std::size_t r = 0; r < capped.num_rows(); ++r) {
    bool rare = false;
    for (std::size_t c : cats) {
      if (counts[c][capped.category(r, c)] < cfg.rare_category_min_count) {
        rare = true;
        break;
      }
    }
    if (!rare) common_rows.push_back(r);
  }
  result.log.stages.push_back(
      {"rare_categories", capped.num_rows() - common_rows.size(),
       "categorical value seen fewer than " + std::to_string(cfg.rare_category_min_count) +
           " times"});
  const Table common = capped.select_rows(common_rows);

  std::vector<std::size_t> kept;
  std::size_t suppressed = 0;
  for (const EquivalenceClass& cls : equivalence_classes(common)) {
    if (cls.member_indices.size() < cfg.k) {
      suppressed += cls.member_indices.size();
      continue;
    }
    for (std::size_t r : cls.member_indices) kept.push_back(r);
  }
  // Keep surviving rows in their original order.
  std::sort(kept.begin(), kept.end());
  result.log.stages.push_back(
      {"suppress_small_classes", suppressed,
       "equivalence class smaller than k=" + std::to_string(cfg.k)});

  result.table = common.select_rows(kept);
  result.kept_rows.reserve(kept.size());
  for (std::size_t r : kept) result.kept_rows.push_back(common_rows[r]);
  result.log.output_rows = kept.size();
  result.empty_result = kept.empty();
  return result;
}

KAnonymityReport verify_k_anonymity(const Table& t, std::size_t k) {
  KAnonymityReport report;
  for (EquivalenceClass& cls : equivalence_classes(t)) {
    if (cls.member_indices.size() < k) report.violations.push_back(std::move(cls));
  }
  report.k_anonymous = report.violations.empty();
  return report;
}

nlohmann::json SanitizeLog::to_json() const {
  nlohmann::json stages_json = nlohmann::json::array();
  for (const SanitizeStage& s : stages) {
    stages_json.push_back({{"stage", s.stage}, {"rows_removed", s.rows_removed},
                           {"reason", s.reason}});
  }
  return {{"input_rows", input_rows}, {"output_rows", output_rows}, {"stages", stages_json}};
}

std::string SanitizeLog::to_text() const {
  std::ostringstream out;
  out << "input_rows " << input_rows << '\n';
  for (const SanitizeStage& s : stages) {
    out << s.stage << ' ' << s.rows_removed << " # " << s.reason << '\n';
  }
  out << "output_rows " << output_rows << '\n';
  return out.str();
}

}  // namespace ppbench
