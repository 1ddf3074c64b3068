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

#ifndef PATCHLINK_SYNTHETIC_CORPUS_H_
#define PATCHLINK_SYNTHETIC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "patchlink/patch.h"

namespace patchlink {

struct SyntheticCorpusOptions {
  std::size_t patch_count = 500;
  // Each pair is a target patch plus a later near-duplicate whose review
  // discussion links back to it.
  std::size_t planted_pairs = 50;
  double span_days = 60.0;
  // Upper bound on the creation gap within a pair.
  double max_pair_gap_days = 5.0;
  // Files per target; the duplicate keeps all but one of them.
  std::size_t target_files = 5;
  std::uint64_t seed = 42;
};

struct SyntheticCorpus {
  std::vector<Patch> patches;
  std::vector<GroundTruthEntry> ground_truth;
};

// Review-like corpus with planted linkages: each duplicate repeats the
// target's title verbatim and shares (target_files - 1) / target_files of
// its file set. Deterministic for a seed.
SyntheticCorpus GenerateSyntheticCorpus(const SyntheticCorpusOptions& options);

}  // namespace patchlink

#endif  // PATCHLINK_SYNTHETIC_CORPUS_H_
