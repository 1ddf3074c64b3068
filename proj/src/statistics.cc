/*
 * Copyright 2026 The patchlink Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "patchlink/statistics.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "patchlink/error.h"

namespace patchlink::stats {

std::string_view EffectMagnitudeName(EffectMagnitude magnitude) {
  switch (magnitude) {
    case EffectMagnitude::kNegligible: return "Negligible";
    case EffectMagnitude::kSmall: return "Small";
    case EffectMagnitude::kMedium: return "Medium";
    case EffectMagnitude::kLarge: return "Large";
  }
  return "Negligible";
}

EffectMagnitude ClassifyCliffsDelta(double delta) {
  const double magnitude = std::abs(delta);
  if (magnitude < 0.147) return EffectMagnitude::kNegligible;
  if (magnitude < 0.33) return EffectMagnitude::kSmall;
  if (magnitude < 0.474) return EffectMagnitude::kMedium;
  return EffectMagnitude::kLarge;
}

namespace {

void RequireNonEmpty(std::span<const double> sample, const char* name) {
  if (sample.empty()) {
    throw Error(ErrorCode::kValidation, std::string(name) + " sample is empty");
  }
}

struct RankedPool {
  // Doubled midranks (always integral) of the pooled values; the first n
  // belong to xs.
  std::vector<std::int64_t> doubled_ranks;
  // sum over tie groups of t^3 - t
  double tie_term = 0.0;
};

RankedPool RankPooled(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t total = xs.size() + ys.size();
  std::vector<double> pooled;
  pooled.reserve(total);
  pooled.insert(pooled.end(), xs.begin(), xs.end());
  pooled.insert(pooled.end(), ys.begin(), ys.end());
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  RankedPool ranked;
  ranked.doubled_ranks.assign(total, 0);
  std::size_t i = 0;
  while (i < total) {
    std::size_t j = i;
    while (j + 1 < total && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    // positions i..j (0-based) share rank ((i+1) + (j+1)) / 2
    const auto doubled = static_cast<std::int64_t>(i + j + 2);
    for (std::size_t p = i; p <= j; ++p) ranked.doubled_ranks[order[p]] = doubled;
    const auto t = static_cast<double>(j - i + 1);
    ranked.tie_term += t * t * t - t;
    i = j + 1;
  }
  return ranked;
}

// Exact two-sided p under random assignment of the pooled (possibly tied)
// ranks: P(|U - nm/2| >= |u_obs - nm/2|), counting subsets of size n by
// doubled rank sum.
double ExactMannWhitneyP(const RankedPool& ranked, std::size_t n, std::size_t m,
                         std::int64_t observed_doubled_sum) {
  const std::size_t total = n + m;
  std::int64_t max_sum = 0;
  for (auto r : ranked.doubled_ranks) max_sum += r;
  // ways[c][s]: subsets of c items with doubled rank sum s.
  std::vector<std::vector<std::uint64_t>> ways(
      n + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_sum) + 1, 0));
  ways[0][0] = 1;
  for (std::size_t item = 0; item < total; ++item) {
    const auto r = static_cast<std::size_t>(ranked.doubled_ranks[item]);
    for (std::size_t c = std::min(n, item + 1); c >= 1; --c) {
      for (std::size_t s = static_cast<std::size_t>(max_sum); s >= r; --s) {
        ways[c][s] += ways[c - 1][s - r];
        if (s == r) break;
      }
    }
  }
  const auto n64 = static_cast<std::int64_t>(n);
  const auto centre = n64 * static_cast<std::int64_t>(m);  // doubled mean of U
  const auto offset = n64 * (n64 + 1);                     // doubled n(n+1)/2
  const std::int64_t observed = std::llabs(observed_doubled_sum - offset - centre);
  std::uint64_t extreme = 0;
  std::uint64_t all = 0;
  for (std::int64_t s = 0; s <= max_sum; ++s) {
    const std::uint64_t count = ways[n][static_cast<std::size_t>(s)];
    if (count == 0) continue;
    all += count;
    if (std::llabs(s - offset - centre) >= observed) extreme += count;
  }
  return static_cast<double>(extreme) / static_cast<double>(all);
}

}  // namespace

std::vector<double> MidRanks(std::span<const double> values) {
  const RankedPool ranked = RankPooled(values, {});
  std::vector<double> ranks;
  ranks.reserve(values.size());
  for (auto doubled : ranked.doubled_ranks) ranks.push_back(static_cast<double>(doubled) / 2.0);
  return ranks;
}

double Median(std::span<const double> values) {
  RequireNonEmpty(values, "median");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

StatResult MannWhitneyU(std::span<const double> xs, std::span<const double> ys) {
  RequireNonEmpty(xs, "first");
  RequireNonEmpty(ys, "second");
  const std::size_t n = xs.size();
  const std::size_t m = ys.size();
  const RankedPool ranked = RankPooled(xs, ys);
  std::int64_t doubled_sum = 0;
  for (std::size_t i = 0; i < n; ++i) doubled_sum += ranked.doubled_ranks[i];

  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  StatResult result;
  result.statistic = static_cast<double>(doubled_sum) / 2.0 - nd * (nd + 1.0) / 2.0;

  if (n + m <= kExactMannWhitneyLimit) {
    result.p_value = ExactMannWhitneyP(ranked, n, m, doubled_sum);
    result.exact = true;
    return result;
  }
  const double total = nd + md;
  const double mean = nd * md / 2.0;
  const double variance =
      nd * md / 12.0 * ((total + 1.0) - ranked.tie_term / (total * (total - 1.0)));
  if (variance <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double z =
      std::max(0.0, std::abs(result.statistic - mean) - 0.5) / std::sqrt(variance);
  result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

StatResult CliffsDelta(std::span<const double> xs, std::span<const double> ys) {
  RequireNonEmpty(xs, "first");
  RequireNonEmpty(ys, "second");
  std::vector<double> sorted(ys.begin(), ys.end());
  std::sort(sorted.begin(), sorted.end());
  std::int64_t greater = 0;
  std::int64_t less = 0;
  for (double x : xs) {
    greater += std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    less += sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
  }
  const double delta = static_cast<double>(greater - less) /
                       (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
  StatResult result = MannWhitneyU(xs, ys);
  result.statistic = delta;
  result.effect_size = delta;
  result.magnitude = ClassifyCliffsDelta(delta);
  return result;
}

StatResult KruskalWallis(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) {
    throw Error(ErrorCode::kValidation, "Kruskal-Wallis needs at least two groups");
  }
  std::vector<double> pooled;
  for (const auto& group : groups) {
    RequireNonEmpty(group, "Kruskal-Wallis group");
    pooled.insert(pooled.end(), group.begin(), group.end());
  }
  const RankedPool ranked = RankPooled(pooled, {});
  const double total = static_cast<double>(pooled.size());

  double weighted = 0.0;
  std::size_t offset = 0;
  for (const auto& group : groups) {
    std::int64_t doubled = 0;
    for (std::size_t i = 0; i < group.size(); ++i) doubled += ranked.doubled_ranks[offset + i];
    const double rank_sum = static_cast<double>(doubled) / 2.0;
    weighted += rank_sum * rank_sum / static_cast<double>(group.size());
    offset += group.size();
  }

  StatResult result;
  const double correction = 1.0 - ranked.tie_term / (total * total * total - total);
  if (correction <= 0.0) {
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }
  const double h =
      (12.0 / (total * (total + 1.0)) * weighted - 3.0 * (total + 1.0)) / correction;
  result.statistic = std::max(0.0, h);
  const double dof = static_cast<double>(groups.size() - 1);
  result.p_value = boost::math::gamma_q(dof / 2.0, result.statistic / 2.0);
  return result;
}

}  // namespace patchlink::stats
