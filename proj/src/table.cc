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

#include "ppbench/table.h"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "ppbench/error.h"

namespace ppbench {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kConfig: return "Config";
    case ErrorCode::kUnknownCategory: return "UnknownCategory";
    case ErrorCode::kMalformedNumeric: return "MalformedNumeric";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInsufficientRows: return "InsufficientRows";
    case ErrorCode::kNoScoredColumns: return "NoScoredColumns";
    case ErrorCode::kDegenerateColumn: return "DegenerateColumn";
    case ErrorCode::kNoQidColumns: return "NoQidColumns";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kNoTargetColumn: return "NoTargetColumn";
    case ErrorCode::kEmptySplit: return "EmptySplit";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kEmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::kInsufficientPopulation: return "InsufficientPopulation";
    case ErrorCode::kDisjointnessViolation: return "DisjointnessViolation";
    case ErrorCode::kFoldTooSmall: return "FoldTooSmall";
    case ErrorCode::kEmptyResults: return "EmptyResults";
  }
  return "Unknown";
}

std::string_view to_string(ColumnKind kind) {
  return kind == ColumnKind::kNumeric ? "numeric" : "categorical";
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kQid: return "qid";
    case Role::kTarget: return "target";
    case Role::kOutlierScored: return "outlier_scored";
  }
  return "";
}

std::optional<int> ColumnSpec::category_index(std::string_view label) const {
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (categories[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

Schema::Schema(std::vector<ColumnSpec> columns) : columns_(std::move(columns)) {
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const ColumnSpec& col = columns_[i];
    if (col.name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "column name must not be empty");
    }
    if (!names.insert(col.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate column name '" + col.name + "'");
    }
    if (col.is_categorical()) {
      if (col.categories.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "categorical column '" + col.name + "' has no categories");
      }
      std::unordered_set<std::string> labels(col.categories.begin(), col.categories.end());
      if (labels.size() != col.categories.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate category in column '" + col.name + "'");
      }
    } else if (!col.categories.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "numeric column '" + col.name + "' lists categories");
    }
    if (col.has_role(Role::kTarget)) {
      if (target_) {
        throw Error(ErrorCode::kInvalidArgument, "more than one target column");
      }
      if (!col.is_categorical()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "target column '" + col.name + "' must be categorical");
      }
      target_ = i;
    }
    if (col.has_role(Role::kOutlierScored) && !col.is_numeric()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "outlier-scored column '" + col.name + "' must be numeric");
    }
  }
}

std::optional<std::size_t> Schema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::require(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  throw Error(ErrorCode::kMissingColumn, "no column named '" + std::string(name) + "'");
}

std::vector<std::size_t> Schema::indices_with(Role role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].has_role(role)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Schema::indices_of(ColumnKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].kind == kind) out.push_back(i);
  }
  return out;
}

Table::Table(Schema schema)
    : schema_(std::make_shared<const Schema>(std::move(schema))),
      columns_(schema_->size()) {}

Table::Table(Schema schema, std::vector<std::vector<Cell>> columns)
    : schema_(std::make_shared<const Schema>(std::move(schema))),
      columns_(std::move(columns)) {
  if (columns_.size() != schema_->size()) {
    throw Error(ErrorCode::kArityMismatch, "expected " + std::to_string(schema_->size()) +
                                               " columns, got " +
                                               std::to_string(columns_.size()));
  }
  rows_ = columns_.empty() ? 0 : columns_.front().size();
  validate();
}

Table::Table(std::shared_ptr<const Schema> schema, std::vector<std::vector<Cell>> columns,
             std::size_t rows)
    : schema_(std::move(schema)), columns_(std::move(columns)), rows_(rows) {}

void Table::validate() const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const ColumnSpec& spec = schema_->column(c);
    if (columns_[c].size() != rows_) {
      throw Error(ErrorCode::kArityMismatch, "column '" + spec.name + "' has " +
                                                 std::to_string(columns_[c].size()) +
                                                 " rows, expected " + std::to_string(rows_));
    }
    for (Cell v : columns_[c]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kMalformedNumeric, "non-finite cell in '" + spec.name + "'");
      }
      if (spec.is_categorical()) {
        const auto n = static_cast<double>(spec.categories.size());
        if (v < 0 || v >= n || v != std::floor(v)) {
          throw Error(ErrorCode::kUnknownCategory,
                      "category index out of range in '" + spec.name + "'");
        }
      }
    }
  }
}

Table Table::from_rows(Schema schema, std::span<const Record> rows) {
  const std::size_t m = schema.size();
  std::vector<std::vector<Cell>> columns(m);
  for (auto& col : columns) col.reserve(rows.size());
  for (const Record& r : rows) {
    if (r.size() != m) {
      throw Error(ErrorCode::kArityMismatch, "record has " + std::to_string(r.size()) +
                                                 " cells, schema has " + std::to_string(m));
    }
    for (std::size_t c = 0; c < m; ++c) columns[c].push_back(r[c]);
  }
  if (m == 0) return Table(std::move(schema));
  return Table(std::move(schema), std::move(columns));
}

Table Table::concatenate(std::span<const Table> tables) {
  if (tables.empty()) {
    throw Error(ErrorCode::kEmptyInput, "nothing to concatenate");
  }
  const Table& first = tables.front();
  std::vector<std::vector<Cell>> columns(first.num_columns());
  std::size_t rows = 0;
  for (const Table& t : tables) {
    require_same_schema(first.schema(), t.schema());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      columns[c].insert(columns[c].end(), t.columns_[c].begin(), t.columns_[c].end());
    }
    rows += t.num_rows();
  }
  return Table(first.schema_, std::move(columns), rows);
}

Record Table::row(std::size_t r) const {
  if (r >= rows_) throw Error(ErrorCode::kInvalidArgument, "row index out of range");
  Record out(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) out[c] = columns_[c][r];
  return out;
}

Table Table::select_rows(std::span<const std::size_t> indices) const {
  std::vector<std::vector<Cell>> columns(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    columns[c].reserve(indices.size());
    for (std::size_t r : indices) {
      if (r >= rows_) throw Error(ErrorCode::kInvalidArgument, "row index out of range");
      columns[c].push_back(columns_[c][r]);
    }
  }
  return Table(schema_, std::move(columns), indices.size());
}

Table Table::with_row(const Record& record) const {
  if (record.size() != columns_.size()) {
    throw Error(ErrorCode::kArityMismatch, "record arity does not match schema");
  }
  std::vector<std::vector<Cell>> columns = columns_;
  for (std::size_t c = 0; c < columns.size(); ++c) columns[c].push_back(record[c]);
  Table out(schema_, std::move(columns), rows_ + 1);
  out.validate();
  return out;
}

Table Table::with_column(std::size_t col, std::vector<Cell> values) const {
  if (col >= columns_.size() || values.size() != rows_) {
    throw Error(ErrorCode::kArityMismatch, "replacement column has wrong shape");
  }
  std::vector<std::vector<Cell>> columns = columns_;
  columns[col] = std::move(values);
  Table out(schema_, std::move(columns), rows_);
  out.validate();
  return out;
}

void require_same_schema(const Schema& a, const Schema& b) {
  if (a == b) return;
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kSchemaMismatch, "column counts differ");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.column(i) == b.column(i))) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "column " + std::to_string(i) + " ('" + a.column(i).name + "' vs '" +
                      b.column(i).name + "') differs");
    }
  }
  throw Error(ErrorCode::kSchemaMismatch, "schemas differ");
}

}  // namespace ppbench
