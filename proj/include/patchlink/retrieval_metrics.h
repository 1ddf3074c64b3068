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

#ifndef PATCHLINK_RETRIEVAL_METRICS_H_
#define PATCHLINK_RETRIEVAL_METRICS_H_

#include <map>
#include <optional>
#include <span>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"

namespace patchlink {

inline constexpr int kMinCutoff = 1;
inline constexpr int kMaxCutoff = 10;

// Detection results keyed by query (ground-truth source) id.
using ResultMap = std::map<PatchId, CandidateList>;

// |G|, |D| for one cut-off and (optionally) one linkage type, plus the sum of
// reciprocal ranks over D.
struct RetrievalCounts {
  std::size_t ground_truth = 0;
  std::size_t retrieved = 0;
  double reciprocal_rank_sum = 0.0;
};

// Throws kRange for k outside [1, 10] and kValidation if a ground-truth
// source has no result list.
RetrievalCounts CountRetrieved(const ResultMap& results,
                               std::span<const GroundTruthEntry> ground_truth,
                               int k, std::optional<LinkageType> type_filter);

// |D| / |G|, or |D_type| / |G_type| with a type filter. Throws
// kUndefinedMetric when the (filtered) ground truth is empty.
double RecallAtK(const ResultMap& results,
                 std::span<const GroundTruthEntry> ground_truth, int k,
                 std::optional<LinkageType> type_filter = std::nullopt);

// |D_type| / |D|; nullopt when nothing was retrieved at all.
std::optional<double> PrecisionAtK(const ResultMap& results,
                                   std::span<const GroundTruthEntry> ground_truth,
                                   int k, LinkageType linkage_type);

// Mean over G of 1 / rank of the target within the top k, 0 for misses.
double MrrAtK(const ResultMap& results,
              std::span<const GroundTruthEntry> ground_truth, int k,
              std::optional<LinkageType> type_filter = std::nullopt);

}  // namespace patchlink

#endif  // PATCHLINK_RETRIEVAL_METRICS_H_
