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

#include "patchlink/retrieval_metrics.h"

#include "patchlink/error.h"

namespace patchlink {

RetrievalCounts CountRetrieved(const ResultMap& results,
                               std::span<const GroundTruthEntry> ground_truth,
                               int k, std::optional<LinkageType> type_filter) {
  if (k < kMinCutoff || k > kMaxCutoff) {
    throw Error(ErrorCode::kRange, "k must lie in [1, 10], got " + std::to_string(k));
  }
  RetrievalCounts counts;
  for (const auto& entry : ground_truth) {
    const auto it = results.find(entry.source_id);
    if (it == results.end()) {
      throw Error(ErrorCode::kValidation,
                  "no detection result for query " + std::to_string(entry.source_id));
    }
    if (type_filter && entry.linkage_type != *type_filter) continue;
    ++counts.ground_truth;
    const int rank = it->second.RankOf(entry.target_id);
    if (rank >= 1 && rank <= k) {
      ++counts.retrieved;
      counts.reciprocal_rank_sum += 1.0 / static_cast<double>(rank);
    }
  }
  return counts;
}

double RecallAtK(const ResultMap& results,
                 std::span<const GroundTruthEntry> ground_truth, int k,
                 std::optional<LinkageType> type_filter) {
  const auto counts = CountRetrieved(results, ground_truth, k, type_filter);
  if (counts.ground_truth == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "recall over empty ground truth");
  }
  return static_cast<double>(counts.retrieved) /
         static_cast<double>(counts.ground_truth);
}

std::optional<double> PrecisionAtK(const ResultMap& results,
                                   std::span<const GroundTruthEntry> ground_truth,
                                   int k, LinkageType linkage_type) {
  const auto all = CountRetrieved(results, ground_truth, k, std::nullopt);
  if (all.ground_truth == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "precision over empty ground truth");
  }
  if (all.retrieved == 0) return std::nullopt;
  const auto typed = CountRetrieved(results, ground_truth, k, linkage_type);
  return static_cast<double>(typed.retrieved) / static_cast<double>(all.retrieved);
}

double MrrAtK(const ResultMap& results,
              std::span<const GroundTruthEntry> ground_truth, int k,
              std::optional<LinkageType> type_filter) {
  const auto counts = CountRetrieved(results, ground_truth, k, type_filter);
  if (counts.ground_truth == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "MRR over empty ground truth");
  }
  return counts.reciprocal_rank_sum / static_cast<double>(counts.ground_truth);
}

}  // namespace patchlink
