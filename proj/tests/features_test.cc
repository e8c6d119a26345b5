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

#include "ppbench/features.h"

#include <gtest/gtest.h>

#include "ppbench/error.h"
#include "test_util.h"

namespace ppbench {
namespace {

using testing::categorical;
using testing::numeric;

TEST(FeaturesTest, HistogramTwoBins) {
  const Table t = testing::numeric_column({1, 1, 3, 3});
  const ReferenceRanges r = ReferenceRanges::from_population(t, 2);
  const FeatureVector f = extract_features(t, FeatureSetKind::kHistograms, r);
  EXPECT_EQ(f.values, (std::vector<double>{2, 2}));
  EXPECT_FALSE(f.range_mismatch);
}

TEST(FeaturesTest, HistogramClampsAndFlags) {
  const ReferenceRanges r = ReferenceRanges::from_population(testing::numeric_column({0, 10}), 2);
  const FeatureVector f =
      extract_features(testing::numeric_column({-5, 4, 50}), FeatureSetKind::kHistograms, r);
  EXPECT_EQ(f.values, (std::vector<double>{2, 1}));
  EXPECT_TRUE(f.range_mismatch);
}

TEST(FeaturesTest, HistogramCategoricalUsesSchemaList) {
  const Table t(Schema({categorical("c", {"a", "b", "c"})}), {{2, 2, 0}});
  const FeatureVector f =
      extract_features(t, FeatureSetKind::kHistograms, ReferenceRanges::from_population(t));
  EXPECT_EQ(f.values, (std::vector<double>{1, 0, 2}));
}

TEST(FeaturesTest, ExtraRecordsWidenRanges) {
  const Table t = testing::numeric_column({0, 1});
  const std::vector<Record> extra{{9.0}};
  const ReferenceRanges r = ReferenceRanges::from_population(t, 3, extra);
  EXPECT_EQ(r.numeric_edges[0].front(), 0.0);
  EXPECT_EQ(r.numeric_edges[0].back(), 9.0);
}

TEST(FeaturesTest, SummaryConstantColumn) {
  const Table t(Schema({numeric("x"), categorical("c", {"a", "b", "c"})}), {{4, 4, 4}, {1, 1, 2}});
  const FeatureVector f =
      extract_features(t, FeatureSetKind::kSummaryStats, ReferenceRanges::from_population(t));
  EXPECT_EQ(f.values, (std::vector<double>{4, 4, 0, 2, 1, 2}));
}

TEST(FeaturesTest, CorrelationOfIdenticalColumns) {
  const Table t(Schema({numeric("a"), numeric("b"), numeric("k")}),
                {{1, 2, 3, 7}, {1, 2, 3, 7}, {5, 5, 5, 5}});
  const FeatureVector f = extract_features(t, FeatureSetKind::kPairwiseCorrelations,
                                           ReferenceRanges::from_population(t));
  ASSERT_EQ(f.values.size(), 3u);
  EXPECT_DOUBLE_EQ(f.values[0], 1.0);
  EXPECT_EQ(f.values[1], 0.0);  // constant column
  EXPECT_EQ(f.values[2], 0.0);
}

TEST(FeaturesTest, SchemaMustMatchRanges) {
  const ReferenceRanges r = ReferenceRanges::from_population(testing::numeric_column({1, 2}));
  const Table other(Schema({numeric("y")}), {{1}});
  EXPECT_THROW(extract_features(other, FeatureSetKind::kHistograms, r), Error);
}

TEST(FeaturesTest, ParseNames) {
  for (FeatureSetKind k : {FeatureSetKind::kHistograms, FeatureSetKind::kPairwiseCorrelations,
                           FeatureSetKind::kSummaryStats}) {
    EXPECT_EQ(parse_feature_set(to_string(k)), k);
  }
  EXPECT_THROW(parse_feature_set("bogus"), Error);
}

// Vector length depends only on the schema and ranges, never on the data.
TEST(FeaturesProperty, FixedLength) {
  Rng rng(3);
  const Table pop = testing::random_qid_table(rng, 100, 4);
  const ReferenceRanges r = ReferenceRanges::from_population(pop, 10);
  for (FeatureSetKind k : {FeatureSetKind::kHistograms, FeatureSetKind::kPairwiseCorrelations,
                           FeatureSetKind::kSummaryStats}) {
    const std::size_t len = extract_features(pop, k, r).values.size();
    for (int i = 0; i < 20; ++i) {
      std::vector<std::size_t> rows(1 + rng() % 50);
      for (auto& x : rows) x = rng() % pop.num_rows();
      EXPECT_EQ(extract_features(pop.select_rows(rows), k, r).values.size(), len);
    }
  }
}

}  // namespace
}  // namespace ppbench
