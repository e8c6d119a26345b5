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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ppbench/error.h"
#include "ppbench/random.h"
#include "test_util.h"

namespace ppbench {
namespace {

using testing::categorical;
using testing::numeric;

Schema two_columns() {
  return Schema({numeric("x"), categorical("c", {"A", "B"}, {Role::kTarget})});
}

Table parse(const std::string& text, const Schema& s = two_columns()) {
  std::istringstream in(text);
  return parse_csv(in, s);
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(IngestTest, ThreeRowsTwoColumns) {
  const Table t = parse("x,c\n1.5,A\n2,B\n-3,A\n");
  EXPECT_EQ(t.num_rows(), 3u);
  EXPECT_EQ(t.num_columns(), 2u);
  EXPECT_EQ(t.at(2, 0), -3.0);
  EXPECT_EQ(t.category(1, 1), 1);
}

TEST(IngestTest, UnknownCategory) {
  EXPECT_EQ(parse_error("x,c\n1,Z\n"), ErrorCode::kUnknownCategory);
}

TEST(IngestTest, ArityMismatch) { EXPECT_EQ(parse_error("x,c\n1\n"), ErrorCode::kArityMismatch); }

TEST(IngestTest, MalformedNumeric) {
  EXPECT_EQ(parse_error("x,c\n1.2.3,A\n"), ErrorCode::kMalformedNumeric);
  EXPECT_EQ(parse_error("x,c\n,A\n"), ErrorCode::kMalformedNumeric);
  EXPECT_EQ(parse_error("x,c\nnan,A\n"), ErrorCode::kMalformedNumeric);
}

TEST(IngestTest, HeaderMustMatch) {
  EXPECT_EQ(parse_error("c,x\nA,1\n"), ErrorCode::kMissingColumn);
  EXPECT_EQ(parse_error("x\n1\n"), ErrorCode::kMissingColumn);
}

TEST(IngestTest, QuotedFieldsAndCrlf) {
  const Schema s({numeric("x"), categorical("c", {"a,b", "say \"hi\""})});
  const Table t = parse("x,c\r\n1,\"a,b\"\r\n2,\"say \"\"hi\"\"\"\r\n", s);
  EXPECT_EQ(t.num_rows(), 2u);
  EXPECT_EQ(t.category(0, 1), 0);
  EXPECT_EQ(t.category(1, 1), 1);
  EXPECT_EQ(to_csv(t), "x,c\n1,\"a,b\"\n2,\"say \"\"hi\"\"\"\n");
}

TEST(IngestTest, FilesAndSchemaSidecar) {
  const Table t = ingest_csv(testing::source_dir() / "tests/fixtures/kanon_ok.csv",
                             testing::source_dir() / "tests/fixtures/kanon.schema.json");
  EXPECT_EQ(t.num_rows(), 8u);
  EXPECT_EQ(t.schema().target_index(), std::optional<std::size_t>(3));
  EXPECT_EQ(t.schema().indices_with(Role::kQid).size(), 2u);
}

TEST(SchemaJsonTest, RoundTrip) {
  const Schema s({numeric("age", {Role::kQid, Role::kOutlierScored}),
                  categorical("y", {"a", "b"}, {Role::kTarget})});
  EXPECT_EQ(schema_from_json(schema_to_json(s)), s);
}

TEST(SchemaJsonTest, RejectsUnknownKind) {
  const auto j = nlohmann::json::parse(R"({"columns":[{"name":"a","kind":"text"}]})");
  EXPECT_THROW(schema_from_json(j), Error);
}

TEST(FormatTest, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(25.0), "25");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1e21), "1e+21");
}

// Canonical CSV survives ingest -> serialize byte-for-byte.
TEST(IngestProperty, CanonicalRoundTrip) {
  Rng rng(7);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(1 + rng() % 30), c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = trial % 3 == 0 ? std::round(value(rng)) : value(rng);
      c[i] = static_cast<double>(rng() % 2);
    }
    const Table t(two_columns(), {x, c});
    const std::string text = to_csv(t);
    const Table back = parse(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(to_csv(back), text);
  }
}

}  // namespace
}  // namespace ppbench
