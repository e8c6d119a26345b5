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

#ifndef PPBENCH_ANONYMIZER_H_
#define PPBENCH_ANONYMIZER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppbench/table.h"

namespace ppbench {

struct AnonymizationConfig {
  std::size_t k = 10;
  double cap_quantile = 0.95;
  // Categorical values seen fewer times than this are treated as rare and
  // their rows are dropped.
  std::size_t rare_category_min_count = 10;

  // Config with the rare-category threshold tied to k.
  static AnonymizationConfig for_k(std::size_t k, double cap_quantile = 0.95) {
    return AnonymizationConfig{k, cap_quantile, k};
  }
  void validate() const;
};

struct EquivalenceClass {
  std::vector<Cell> qid_signature;
  std::vector<std::size_t> member_indices;
};

// Partitions rows by their values on the QID columns, ordered by signature.
// Throws kNoQidColumns.
std::vector<EquivalenceClass> equivalence_classes(const Table& t);

struct SanitizeStage {
  std::string stage;
  std::size_t rows_removed = 0;
  std::string reason;
};

struct SanitizeLog {
  std::size_t input_rows = 0;
  std::size_t output_rows = 0;
  std::vector<SanitizeStage> stages;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct SanitizeResult {
  Table table;
  SanitizeLog log;
  // Source row index of every surviving row.
  std::vector<std::size_t> kept_rows;
  // Every row was suppressed; `table` is empty but carries the schema.
  bool empty_result = false;
};

// Suppression-only k-anonymization: cap numeric columns, drop rows holding
// rare categories, then drop every equivalence class smaller than k.
// Throws kNoQidColumns.
SanitizeResult nhs_sanitize(const Table& t, const AnonymizationConfig& cfg);

struct KAnonymityReport {
  bool k_anonymous = true;
  std::vector<EquivalenceClass> violations;
};

KAnonymityReport verify_k_anonymity(const Table& t, std::size_t k);

}  // namespace ppbench

#endif  // PPBENCH_ANONYMIZER_H_
