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

#ifndef PATCHLINK_DATASET_H_
#define PATCHLINK_DATASET_H_

#include <cstdint>
#include <span>
#include <vector>

#include "patchlink/patch.h"

namespace patchlink {

// Patches created in [created_at(query) - interval_days, created_at(query)),
// excluding the query, newest first (ties by id ascending).
// Throws kUnknownPatch if the query is not in the store and kRange if
// interval_days is not positive.
std::vector<const Patch*> CandidateWindow(const PatchStore& store,
                                          PatchId query_id,
                                          double interval_days);

// The ground truth usable at a given interval: entries whose target falls in
// the source's candidate window.
std::vector<GroundTruthEntry> GroundTruthForInterval(
    const PatchStore& store, std::span<const GroundTruthEntry> entries,
    double interval_days);

struct SampleDataset {
  // Candidate pool, newest first: the ground-truth targets plus four times as
  // many randomly drawn patches that take part in no linkage.
  std::vector<PatchId> pool;
  std::vector<GroundTruthEntry> ground_truth;
  std::size_t target_count = 0;
  std::size_t filler_count = 0;
};

// Builds the 20% linked / 80% unlinked dataset. Deterministic for a seed.
// Throws kCapacity if there are not enough unlinked patches.
SampleDataset SampleBasedSplit(const PatchStore& store,
                               std::span<const GroundTruthEntry> ground_truth,
                               std::uint64_t seed);

// Pool members other than the query, as store pointers in pool order.
std::vector<const Patch*> SampleCandidates(const PatchStore& store,
                                           const SampleDataset& dataset,
                                           PatchId query_id);

}  // namespace patchlink

#endif  // PATCHLINK_DATASET_H_
