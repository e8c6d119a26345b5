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

// Shared fixtures and generators for the unit tests.

#ifndef PPBENCH_TESTS_TEST_UTIL_H_
#define PPBENCH_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppbench/random.h"
#include "ppbench/table.h"

namespace ppbench::testing {

inline std::filesystem::path source_dir() { return PPBENCH_SOURCE_DIR; }
inline std::filesystem::path desk_csv() { return source_dir() / "data/desk_corpus.csv"; }
inline std::filesystem::path desk_schema() {
  return source_dir() / "data/desk_corpus.schema.json";
}

inline ColumnSpec numeric(std::string name, std::set<Role> roles = {}) {
  return ColumnSpec{std::move(name), ColumnKind::kNumeric, std::move(roles), {}};
}

inline ColumnSpec categorical(std::string name, std::vector<std::string> categories,
                              std::set<Role> roles = {}) {
  return ColumnSpec{std::move(name), ColumnKind::kCategorical, std::move(roles),
                    std::move(categories)};
}

// Single numeric column table.
inline Table numeric_column(const std::vector<double>& values, std::set<Role> roles = {}) {
  return Table(Schema({numeric("x", std::move(roles))}), {values});
}

inline std::vector<std::string> labels(int n, const std::string& prefix = "c") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Random mixed table: `qids` QID columns (alternating numeric with few
// distinct values and categorical), one free numeric column and a binary
// target.
inline Table random_qid_table(Rng& rng, std::size_t n, int qids) {
  std::vector<ColumnSpec> specs;
  std::vector<std::vector<double>> cols;
  for (int q = 0; q < qids; ++q) {
    const int card = 2 + static_cast<int>(rng() % 4);
    if (q % 2 == 0) {
      specs.push_back(numeric("q" + std::to_string(q), {Role::kQid}));
    } else {
      specs.push_back(categorical("q" + std::to_string(q), labels(card), {Role::kQid}));
    }
    std::vector<double> col(n);
    for (double& v : col) v = static_cast<double>(rng() % card);
    cols.push_back(std::move(col));
  }
  specs.push_back(numeric("value"));
  std::vector<double> value(n);
  for (double& v : value) v = static_cast<double>(rng() % 1000) / 10.0;
  cols.push_back(std::move(value));
  specs.push_back(categorical("label", {"no", "yes"}, {Role::kTarget}));
  std::vector<double> label(n);
  for (double& v : label) v = static_cast<double>(rng() % 2);
  cols.push_back(std::move(label));
  return Table(Schema(std::move(specs)), std::move(cols));
}

}  // namespace ppbench::testing

#endif  // PPBENCH_TESTS_TEST_UTIL_H_
