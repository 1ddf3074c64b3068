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

#include "patchlink/dataset.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>
#include <unordered_set>

#include "patchlink/error.h"

namespace patchlink {

std::vector<const Patch*> CandidateWindow(const PatchStore& store,
                                          PatchId query_id,
                                          double interval_days) {
  const Patch& query = store.At(query_id);
  if (!(interval_days > 0.0)) {
    throw Error(ErrorCode::kRange, "interval_days must be positive");
  }
  // created_at >= lower, with lower rounded up to whole seconds.
  const auto lower = static_cast<Timestamp>(std::ceil(
      static_cast<double>(query.created_at) - interval_days * kSecondsPerDay));
  const auto patches = store.ByTime();
  const auto first = std::lower_bound(
      patches.begin(), patches.end(), lower,
      [](const Patch& p, Timestamp t) { return p.created_at < t; });
  const auto last = std::lower_bound(
      first, patches.end(), query.created_at,
      [](const Patch& p, Timestamp t) { return p.created_at < t; });

  std::vector<const Patch*> window;
  window.reserve(static_cast<std::size_t>(std::distance(first, last)));
  for (auto it = first; it != last; ++it) {
    if (it->id != query_id) window.push_back(&*it);
  }
  std::sort(window.begin(), window.end(), [](const Patch* a, const Patch* b) {
    if (a->created_at != b->created_at) return a->created_at > b->created_at;
    return a->id < b->id;
  });
  return window;
}

std::vector<GroundTruthEntry> GroundTruthForInterval(
    const PatchStore& store, std::span<const GroundTruthEntry> entries,
    double interval_days) {
  std::vector<GroundTruthEntry> kept;
  for (const auto& entry : entries) {
    const Patch& source = store.At(entry.source_id);
    const Patch& target = store.At(entry.target_id);
    const double gap = static_cast<double>(source.created_at - target.created_at);
    if (gap > 0 && gap <= interval_days * kSecondsPerDay) kept.push_back(entry);
  }
  return kept;
}

SampleDataset SampleBasedSplit(const PatchStore& store,
                               std::span<const GroundTruthEntry> ground_truth,
                               std::uint64_t seed) {
  std::set<PatchId> linked;
  std::set<PatchId> targets;
  for (const auto& entry : ground_truth) {
    store.At(entry.source_id);
    store.At(entry.target_id);
    linked.insert(entry.source_id);
    linked.insert(entry.target_id);
    targets.insert(entry.target_id);
  }

  std::vector<PatchId> unlinked;
  for (const auto& patch : store.ByTime()) {
    if (!linked.contains(patch.id)) unlinked.push_back(patch.id);
  }
  std::sort(unlinked.begin(), unlinked.end());

  const std::size_t needed = 4 * targets.size();
  if (unlinked.size() < needed) {
    throw Error(ErrorCode::kCapacity,
                "sample-based split needs " + std::to_string(needed) +
                    " unlinked patches but only " +
                    std::to_string(unlinked.size()) + " are available");
  }

  SampleDataset dataset;
  dataset.ground_truth.assign(ground_truth.begin(), ground_truth.end());
  dataset.target_count = targets.size();
  dataset.filler_count = needed;
  dataset.pool.assign(targets.begin(), targets.end());
  std::mt19937_64 rng(seed);
  std::sample(unlinked.begin(), unlinked.end(), std::back_inserter(dataset.pool),
              needed, rng);
  std::sort(dataset.pool.begin(), dataset.pool.end(), [&](PatchId a, PatchId b) {
    const Timestamp ta = store.At(a).created_at;
    const Timestamp tb = store.At(b).created_at;
    if (ta != tb) return ta > tb;
    return a < b;
  });
  return dataset;
}

std::vector<const Patch*> SampleCandidates(const PatchStore& store,
                                           const SampleDataset& dataset,
                                           PatchId query_id) {
  std::vector<const Patch*> candidates;
  candidates.reserve(dataset.pool.size());
  for (PatchId id : dataset.pool) {
    if (id != query_id) candidates.push_back(&store.At(id));
  }
  return candidates;
}

}  // namespace patchlink
