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

#ifndef PPBENCH_TABLE_H_
#define PPBENCH_TABLE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppbench {

enum class ColumnKind { kNumeric, kCategorical };

enum class Role { kQid, kTarget, kOutlierScored };

std::string_view to_string(ColumnKind kind);
std::string_view to_string(Role role);

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kNumeric;
  std::set<Role> roles;
  // Closed, ordered category list; a categorical cell stores its index here.
  std::vector<std::string> categories;

  bool has_role(Role role) const { return roles.count(role) > 0; }
  bool is_numeric() const { return kind == ColumnKind::kNumeric; }
  bool is_categorical() const { return kind == ColumnKind::kCategorical; }
  std::optional<int> category_index(std::string_view label) const;

  friend bool operator==(const ColumnSpec&, const ColumnSpec&) = default;
};

// Ordered column list. Names are unique, at most one column is the target and
// the target (if any) is categorical.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<ColumnSpec> columns);

  std::size_t size() const { return columns_.size(); }
  const ColumnSpec& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<ColumnSpec>& columns() const { return columns_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws kMissingColumn.
  std::size_t require(std::string_view name) const;
  std::optional<std::size_t> target_index() const { return target_; }
  std::vector<std::size_t> indices_with(Role role) const;
  std::vector<std::size_t> indices_of(ColumnKind kind) const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<ColumnSpec> columns_;
  std::optional<std::size_t> target_;
};

// A numeric cell holds its value; a categorical cell holds the category index.
using Cell = double;
using Record = std::vector<Cell>;

// Column-major, immutable table. Every transformation returns a new table and
// the schema is shared between derived tables.
class Table {
 public:
  Table() : Table(Schema{}) {}
  explicit Table(Schema schema);
  // Validates arity, finiteness and category ranges.
  Table(Schema schema, std::vector<std::vector<Cell>> columns);

  static Table from_rows(Schema schema, std::span<const Record> rows);
  static Table concatenate(std::span<const Table> tables);

  const Schema& schema() const { return *schema_; }
  std::size_t num_rows() const { return rows_; }
  std::size_t num_columns() const { return columns_.size(); }
  bool empty() const { return rows_ == 0; }

  std::span<const Cell> column(std::size_t c) const { return columns_.at(c); }
  Cell at(std::size_t row, std::size_t col) const { return columns_[col][row]; }
  int category(std::size_t row, std::size_t col) const {
    return static_cast<int>(columns_[col][row]);
  }
  Record row(std::size_t r) const;

  Table select_rows(std::span<const std::size_t> indices) const;
  Table with_row(const Record& record) const;
  Table with_column(std::size_t col, std::vector<Cell> values) const;

  friend bool operator==(const Table& a, const Table& b) {
    return *a.schema_ == *b.schema_ && a.columns_ == b.columns_;
  }

 private:
  Table(std::shared_ptr<const Schema> schema,
        std::vector<std::vector<Cell>> columns, std::size_t rows);
  void validate() const;

  std::shared_ptr<const Schema> schema_;
  std::vector<std::vector<Cell>> columns_;
  std::size_t rows_ = 0;
};

// Throws kSchemaMismatch when names or kinds differ.
void require_same_schema(const Schema& a, const Schema& b);

}  // namespace ppbench

#endif  // PPBENCH_TABLE_H_
