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

#ifndef PPBENCH_TRADEOFF_H_
#define PPBENCH_TRADEOFF_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace ppbench {

enum class UtilityKind { kStat, kMl };

std::string_view to_string(UtilityKind kind);

struct TradeoffPoint {
  std::string method;
  std::string parameter;  // e.g. "k=10", "bins=5", "eps=1"
  double utility = 0.0;
  UtilityKind utility_kind = UtilityKind::kStat;
  double privacy = 0.0;  // attacker advantage
  std::size_t n_runs = 0;
  double dispersion = 0.0;  // std-dev of utility across runs
};

struct TradeoffSeries {
  std::string method;
  UtilityKind utility_kind = UtilityKind::kStat;
  std::vector<TradeoffPoint> points;  // ordered by parameter value
};

// One series per (method, utility kind) in first-appearance order; points
// ordered by the numeric value after '=' in the parameter label.
std::vector<TradeoffSeries> group_series(std::span<const TradeoffPoint> points);

// Throws kEmptyResults.
nlohmann::json tradeoff_json(std::span<const TradeoffPoint> points);
void emit_tradeoff(std::span<const TradeoffPoint> points, const std::filesystem::path& path);

// Attacker advantage at `utility`, linearly interpolated between the series
// points ordered by utility. nullopt outside the series' utility range. Points
// sharing a utility contribute their lowest advantage.
std::optional<double> interpolate_advantage(const TradeoffSeries& series, double utility);

// `a` dominates `b` at `utility` when its interpolated advantage is no higher.
// False when either series does not reach `utility`.
bool dominates(const TradeoffSeries& a, const TradeoffSeries& b, double utility);

// Methods covering `utility`, best (lowest interpolated advantage) first;
// ties keep series order.
std::vector<std::string> dominance_ordering(std::span<const TradeoffSeries> series,
                                            double utility);

}  // namespace ppbench

#endif  // PPBENCH_TRADEOFF_H_
