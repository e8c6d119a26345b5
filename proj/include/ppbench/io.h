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

#ifndef PPBENCH_IO_H_
#define PPBENCH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ppbench/table.h"

namespace ppbench {

// Schema sidecar, JSON:
//   {"columns": [{"name": "age", "kind": "numeric", "roles": ["qid"]},
//                {"name": "sex", "kind": "categorical", "roles": ["qid"],
//                 "categories": ["F", "M"]}]}
Schema schema_from_json(const nlohmann::json& j);
nlohmann::json schema_to_json(const Schema& schema);
Schema load_schema(const std::filesystem::path& path);

// RFC-4180 CSV with a header row that must match the schema column names in
// order. Incomplete rows are rejected.
Table parse_csv(std::istream& in, const Schema& schema);
Table ingest_csv(const std::filesystem::path& csv_path,
                 const std::filesystem::path& schema_path);

// Canonical CSV: shortest round-trip decimal for numbers, labels for
// categories, "\n" line endings, quoting only where RFC-4180 requires it.
void write_csv(std::ostream& out, const Table& table);
std::string to_csv(const Table& table);

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
std::string csv_escape(std::string_view field);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ppbench

#endif  // PPBENCH_IO_H_
