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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>

#include "ppbench/error.h"
#include "ppbench/io.h"

namespace ppbench {
namespace {

double parameter_value(const std::string& parameter) {
  const auto eq = parameter.find('=');
  const std::string text = eq == std::string::npos ? parameter : parameter.substr(eq + 1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return v;
}

bool parameter_less(const TradeoffPoint& a, const TradeoffPoint& b) {
  const double va = parameter_value(a.parameter);
  const double vb = parameter_value(b.parameter);
  const bool na = std::isnan(va);
  const bool nb = std::isnan(vb);
  if (na != nb) return nb;  // numeric labels first
  if (!na && va != vb) return va < vb;
  return a.parameter < b.parameter;
}

}  // namespace

std::string_view to_string(UtilityKind kind) {
  return kind == UtilityKind::kStat ? "stat" : "ml";
}

std::vector<TradeoffSeries> group_series(std::span<const TradeoffPoint> points) {
  std::vector<TradeoffSeries> series;
  for (const TradeoffPoint& p : points) {
    auto it = std::find_if(series.begin(), series.end(), [&](const TradeoffSeries& s) {
      return s.method == p.method && s.utility_kind == p.utility_kind;
    });
    if (it == series.end()) {
      series.push_back({p.method, p.utility_kind, {}});
      it = series.end() - 1;
    }
    it->points.push_back(p);
  }
  for (TradeoffSeries& s : series) {
    std::stable_sort(s.points.begin(), s.points.end(), parameter_less);
  }
  return series;
}

nlohmann::json tradeoff_json(std::span<const TradeoffPoint> points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyResults, "no trade-off points");
  nlohmann::json series_json = nlohmann::json::array();
  for (const TradeoffSeries& s : group_series(points)) {
    nlohmann::json pts = nlohmann::json::array();
    for (const TradeoffPoint& p : s.points) {
      pts.push_back({{"parameter", p.parameter},
                     {"utility", p.utility},
                     {"privacy", p.privacy},
                     {"dispersion", p.dispersion},
                     {"n_runs", p.n_runs}});
    }
    series_json.push_back({{"method", s.method},
                           {"utility_kind", std::string(to_string(s.utility_kind))},
                           {"points", pts}});
  }
  return {{"axes",
           {{"x", "utility"},
            {"y", "privacy"},
            {"privacy_metric", "attacker_advantage"},
            {"utility_kinds", {"stat", "ml"}}}},
          {"series", series_json}};
}

void emit_tradeoff(std::span<const TradeoffPoint> points, const std::filesystem::path& path) {
  write_file(path, tradeoff_json(points).dump(2) + "\n");
}

std::optional<double> interpolate_advantage(const TradeoffSeries& series, double utility) {
  if (series.points.empty()) return std::nullopt;
  std::map<double, double> curve;  // utility -> lowest advantage
  for (const TradeoffPoint& p : series.points) {
    auto [it, inserted] = curve.emplace(p.utility, p.privacy);
    if (!inserted) it->second = std::min(it->second, p.privacy);
  }
  if (utility < curve.begin()->first || utility > curve.rbegin()->first) return std::nullopt;
  auto hi = curve.lower_bound(utility);
  if (hi->first == utility) return hi->second;
  auto lo = std::prev(hi);
  const double t = (utility - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

bool dominates(const TradeoffSeries& a, const TradeoffSeries& b, double utility) {
  const auto va = interpolate_advantage(a, utility);
  const auto vb = interpolate_advantage(b, utility);
  return va && vb && *va <= *vb;
}

std::vector<std::string> dominance_ordering(std::span<const TradeoffSeries> series,
                                            double utility) {
  std::vector<std::pair<double, std::string>> ranked;
  for (const TradeoffSeries& s : series) {
    if (auto v = interpolate_advantage(s, utility)) ranked.emplace_back(*v, s.method);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (auto& [_, method] : ranked) out.push_back(std::move(method));
  return out;
}

}  // namespace ppbench
