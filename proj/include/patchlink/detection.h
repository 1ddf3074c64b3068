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

#ifndef PATCHLINK_DETECTION_H_
#define PATCHLINK_DETECTION_H_

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"
#include "patchlink/path_similarity.h"
#include "patchlink/text_preprocess.h"

namespace patchlink {

// Feature combination uses the top of the tc and fl_combined lists only.
inline constexpr std::size_t kFeatureCombinationDepth = 10;

// Preprocessed features of every patch in a store. Immutable once built, so
// one instance can serve concurrent Detect calls.
class DetectionContext {
 public:
  DetectionContext(const PatchStore& store,
                   const StopwordList& stopwords = StopwordList::English());

  const PatchStore& store() const { return store_; }
  const TokenSequence& Tokens(PatchId id) const { return tokens_.at(id); }
  const std::vector<PathComponents>& Files(PatchId id) const { return files_.at(id); }

 private:
  const PatchStore& store_;
  std::unordered_map<PatchId, TokenSequence> tokens_;
  std::unordered_map<PatchId, std::vector<PathComponents>> files_;
};

// Ranks the given candidates for a query under one model. An empty candidate
// set yields an empty list flagged empty_window.
CandidateList DetectAmong(const DetectionContext& context, PatchId query_id,
                          std::span<const Patch* const> candidates, Model model);

// Ranks the query's candidate window. Throws kUnknownPatch for an unknown
// query and kRange for a non-positive interval.
CandidateList Detect(const DetectionContext& context, PatchId query_id,
                     double interval_days, Model model);

}  // namespace patchlink

#endif  // PATCHLINK_DETECTION_H_
