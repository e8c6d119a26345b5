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

#include "ppbench/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "ppbench/error.h"

namespace ppbench {
namespace {

ColumnKind parse_kind(const std::string& s) {
  if (s == "numeric") return ColumnKind::kNumeric;
  if (s == "categorical") return ColumnKind::kCategorical;
  throw Error(ErrorCode::kConfig, "unknown column kind '" + s + "'");
}

Role parse_role(const std::string& s) {
  if (s == "qid") return Role::kQid;
  if (s == "target") return Role::kTarget;
  if (s == "outlier_scored") return Role::kOutlierScored;
  throw Error(ErrorCode::kConfig, "unknown column role '" + s + "'");
}

// Splits one CSV record. Returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  char ch;
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && in.peek() == '\n') in.get(ch);
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
      field_started = true;
    }
  }
  if (quoted) throw Error(ErrorCode::kIo, "unterminated quoted field");
  fields.push_back(std::move(field));
  return true;
}

double parse_number(const std::string& text, const std::string& column, std::size_t line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::kMalformedNumeric, "line " + std::to_string(line) + ", column '" +
                                                  column + "': '" + text + "'");
  }
  return value;
}

}  // namespace

Schema schema_from_json(const nlohmann::json& j) {
  if (!j.contains("columns") || !j["columns"].is_array()) {
    throw Error(ErrorCode::kConfig, "schema needs a 'columns' array");
  }
  std::vector<ColumnSpec> columns;
  for (const auto& c : j["columns"]) {
    ColumnSpec spec;
    spec.name = c.at("name").get<std::string>();
    spec.kind = parse_kind(c.at("kind").get<std::string>());
    for (const auto& r : c.value("roles", nlohmann::json::array())) {
      spec.roles.insert(parse_role(r.get<std::string>()));
    }
    spec.categories = c.value("categories", std::vector<std::string>{});
    columns.push_back(std::move(spec));
  }
  return Schema(std::move(columns));
}

nlohmann::json schema_to_json(const Schema& schema) {
  nlohmann::json cols = nlohmann::json::array();
  for (const ColumnSpec& spec : schema.columns()) {
    nlohmann::json c;
    c["name"] = spec.name;
    c["kind"] = std::string(to_string(spec.kind));
    nlohmann::json roles = nlohmann::json::array();
    for (Role r : spec.roles) roles.push_back(std::string(to_string(r)));
    c["roles"] = roles;
    if (spec.is_categorical()) c["categories"] = spec.categories;
    cols.push_back(std::move(c));
  }
  return nlohmann::json{{"columns", cols}};
}

Schema load_schema(const std::filesystem::path& path) {
  try {
    return schema_from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
}

Table parse_csv(std::istream& in, const Schema& schema) {
  const std::size_t m = schema.size();
  std::vector<std::string> fields;
  if (!read_record(in, fields)) {
    throw Error(ErrorCode::kMissingColumn, "CSV has no header row");
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (c >= fields.size() || fields[c] != schema.column(c).name) {
      throw Error(ErrorCode::kMissingColumn,
                  "header column " + std::to_string(c) + " should be '" +
                      schema.column(c).name + "'");
    }
  }
  if (fields.size() != m) {
    throw Error(ErrorCode::kArityMismatch, "header has " + std::to_string(fields.size()) +
                                               " fields, schema has " + std::to_string(m));
  }

  std::vector<std::unordered_map<std::string, int>> lookup(m);
  for (std::size_t c = 0; c < m; ++c) {
    const auto& cats = schema.column(c).categories;
    for (std::size_t i = 0; i < cats.size(); ++i) lookup[c][cats[i]] = static_cast<int>(i);
  }

  std::vector<std::vector<Cell>> columns(m);
  std::size_t line = 1;
  while (read_record(in, fields)) {
    ++line;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != m) {
      throw Error(ErrorCode::kArityMismatch, "line " + std::to_string(line) + " has " +
                                                 std::to_string(fields.size()) +
                                                 " fields, expected " + std::to_string(m));
    }
    for (std::size_t c = 0; c < m; ++c) {
      const ColumnSpec& spec = schema.column(c);
      if (spec.is_numeric()) {
        columns[c].push_back(parse_number(fields[c], spec.name, line));
      } else {
        auto it = lookup[c].find(fields[c]);
        if (it == lookup[c].end()) {
          throw Error(ErrorCode::kUnknownCategory, "line " + std::to_string(line) +
                                                       ", column '" + spec.name + "': '" +
                                                       fields[c] + "'");
        }
        columns[c].push_back(it->second);
      }
    }
  }
  return Table(schema, std::move(columns));
}

Table ingest_csv(const std::filesystem::path& csv_path,
                 const std::filesystem::path& schema_path) {
  Schema schema = load_schema(schema_path);
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + csv_path.string());
  return parse_csv(in, schema);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error(ErrorCode::kInvalidArgument, "unformattable number");
  std::string out(buf, ptr);
  if (out == "-0") out = "0";
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void write_csv(std::ostream& out, const Table& table) {
  const Schema& schema = table.schema();
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (c) out << ',';
    out << csv_escape(schema.column(c).name);
  }
  out << '\n';
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    for (std::size_t c = 0; c < schema.size(); ++c) {
      if (c) out << ',';
      const ColumnSpec& spec = schema.column(c);
      if (spec.is_numeric()) {
        out << format_double(table.at(r, c));
      } else {
        out << csv_escape(spec.categories[table.category(r, c)]);
      }
    }
    out << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace ppbench
