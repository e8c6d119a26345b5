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

#include "ppbench/tradeoff.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "ppbench/error.h"
#include "ppbench/io.h"

namespace ppbench {
namespace {

TradeoffPoint point(std::string method, std::string parameter, double utility, double privacy,
                    UtilityKind kind = UtilityKind::kStat) {
  return TradeoffPoint{std::move(method), std::move(parameter), utility, kind, privacy, 10, 0.01};
}

std::vector<TradeoffPoint> two_methods_four_params() {
  std::vector<TradeoffPoint> p;
  // Deliberately out of parameter order.
  for (int k : {20, 5, 15, 10}) {
    p.push_back(point("k-anon", "k=" + std::to_string(k), 1.0 - k / 100.0, 0.5 - k / 100.0));
  }
  for (const char* eps : {"eps=15", "eps=0.1", "eps=1", "eps=10"}) {
    const double e = std::stod(std::string(eps).substr(4));
    p.push_back(point("PrivBayes", eps, 0.6 + e / 60, e / 100));
  }
  return p;
}

TEST(SeriesTest, GroupsAndOrdersByParameter) {
  const auto series = group_series(two_methods_four_params());
  ASSERT_EQ(series.size(), 2u);
  EXPECT_EQ(series[0].method, "k-anon");
  ASSERT_EQ(series[0].points.size(), 4u);
  EXPECT_EQ(series[0].points[0].parameter, "k=5");
  EXPECT_EQ(series[0].points[3].parameter, "k=20");
  EXPECT_EQ(series[1].points[0].parameter, "eps=0.1");
  EXPECT_EQ(series[1].points[1].parameter, "eps=1");
}

TEST(SeriesTest, UtilityKindsSeparate) {
  std::vector<TradeoffPoint> p{point("A", "k=1", 0.5, 0.1),
                               point("A", "k=1", 0.7, 0.1, UtilityKind::kMl)};
  EXPECT_EQ(group_series(p).size(), 2u);
}

TEST(TradeoffJsonTest, ShapeAndStability) {
  const auto pts = two_methods_four_params();
  const nlohmann::json j = tradeoff_json(pts);
  ASSERT_EQ(j.at("series").size(), 2u);
  EXPECT_EQ(j.at("series")[0].at("points").size(), 4u);
  EXPECT_EQ(j.at("axes").at("privacy_metric"), "attacker_advantage");
  EXPECT_EQ(j.at("series")[1].at("utility_kind"), "stat");
  EXPECT_EQ(j.at("series")[0].at("points")[0].at("dispersion"), 0.01);
  EXPECT_EQ(tradeoff_json(pts).dump(), j.dump());
}

TEST(TradeoffJsonTest, EmptyResults) {
  try {
    tradeoff_json({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyResults);
  }
}

TEST(TradeoffJsonTest, EmitWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ppbench_tradeoff_test/out.json";
  emit_tradeoff(two_methods_four_params(), path);
  EXPECT_EQ(nlohmann::json::parse(read_file(path)), tradeoff_json(two_methods_four_params()));
}

// Hand-built fixture. A: (0.6, 0.10) (0.8, 0.30) (0.9, 0.50).
// B: (0.5, 0.05) (0.7, 0.15) (1.0, 0.45).
TradeoffSeries series(std::string method, std::vector<std::pair<double, double>> pts) {
  TradeoffSeries s{method, UtilityKind::kStat, {}};
  int i = 0;
  for (auto [u, a] : pts) s.points.push_back(point(method, "p=" + std::to_string(i++), u, a));
  return s;
}

// Oracle: locate the segment by hand and interpolate linearly.
double manual(const std::vector<std::pair<double, double>>& pts, double u) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto [u0, a0] = pts[i];
    const auto [u1, a1] = pts[i + 1];
    if (u >= u0 && u <= u1) return a0 + (a1 - a0) * (u - u0) / (u1 - u0);
  }
  return -1;
}

TEST(DominanceTest, HandBuiltFixture) {
  const std::vector<std::pair<double, double>> a{{0.6, 0.10}, {0.8, 0.30}, {0.9, 0.50}};
  const std::vector<std::pair<double, double>> b{{0.5, 0.05}, {0.7, 0.15}, {1.0, 0.45}};
  const TradeoffSeries sa = series("A", a), sb = series("B", b);
  for (double u : {0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9}) {
    EXPECT_NEAR(*interpolate_advantage(sa, u), manual(a, u), 1e-12);
    EXPECT_NEAR(*interpolate_advantage(sb, u), manual(b, u), 1e-12);
    EXPECT_EQ(dominates(sa, sb, u), manual(a, u) <= manual(b, u)) << u;
  }
  // At 0.65: A = 0.15, B = 0.125 -> B first. At 0.75: A = 0.25, B = 0.2.
  const std::vector<TradeoffSeries> both{sa, sb};
  EXPECT_EQ(dominance_ordering(both, 0.65), (std::vector<std::string>{"B", "A"}));
  EXPECT_EQ(dominance_ordering(both, 0.6), (std::vector<std::string>{"A", "B"}));
  // Outside A's range only B is ranked.
  EXPECT_EQ(dominance_ordering(both, 0.95), (std::vector<std::string>{"B"}));
  EXPECT_FALSE(interpolate_advantage(sa, 0.95).has_value());
  EXPECT_FALSE(dominates(sa, sb, 0.95));
}

TEST(DominanceTest, DuplicateUtilityTakesLowestAdvantage) {
  const TradeoffSeries s = series("S", {{0.5, 0.4}, {0.5, 0.2}, {1.0, 0.6}});
  EXPECT_DOUBLE_EQ(*interpolate_advantage(s, 0.5), 0.2);
  EXPECT_DOUBLE_EQ(*interpolate_advantage(s, 0.75), 0.4);
}

}  // namespace
}  // namespace ppbench
