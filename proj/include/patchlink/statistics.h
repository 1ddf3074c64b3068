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

#ifndef PATCHLINK_STATISTICS_H_
#define PATCHLINK_STATISTICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace patchlink::stats {

enum class EffectMagnitude { kNegligible, kSmall, kMedium, kLarge };

std::string_view EffectMagnitudeName(EffectMagnitude magnitude);

// |delta| < 0.147 negligible, < 0.33 small, < 0.474 medium, otherwise large.
EffectMagnitude ClassifyCliffsDelta(double delta);

struct StatResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::optional<double> effect_size;
  std::optional<EffectMagnitude> magnitude;
  // True when p_value comes from the exact permutation distribution rather
  // than an asymptotic approximation.
  bool exact = false;
};

// Pooled samples up to this size get an exact Mann-Whitney p-value.
inline constexpr std::size_t kExactMannWhitneyLimit = 20;

// Mann-Whitney U for xs (midranks for ties) with a two-sided p-value: exact
// conditional permutation distribution for small pooled samples, otherwise
// the tie-corrected normal approximation with continuity correction.
// Throws kValidation on an empty sample.
StatResult MannWhitneyU(std::span<const double> xs, std::span<const double> ys);

// Cliff's delta (#{x > y} - #{x < y}) / (|xs| |ys|) with its magnitude class.
// The p-value is the Mann-Whitney one for the same samples.
// Throws kValidation on an empty sample.
StatResult CliffsDelta(std::span<const double> xs, std::span<const double> ys);

// Kruskal-Wallis H with tie correction; p from the chi-square distribution
// with (groups - 1) degrees of freedom. Throws kValidation for fewer than two
// groups or an empty group.
StatResult KruskalWallis(std::span<const std::vector<double>> groups);

// Midranks (1-based, ties averaged) of the values in their original order.
std::vector<double> MidRanks(std::span<const double> values);

// Throws kValidation on an empty sample.
double Median(std::span<const double> values);

}  // namespace patchlink::stats

#endif  // PATCHLINK_STATISTICS_H_
