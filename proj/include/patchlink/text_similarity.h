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

#ifndef PATCHLINK_TEXT_SIMILARITY_H_
#define PATCHLINK_TEXT_SIMILARITY_H_

#include <span>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"
#include "patchlink/text_preprocess.h"

namespace patchlink {

struct TextCandidate {
  PatchId id = 0;
  Timestamp created_at = 0;
  const TokenSequence* tokens = nullptr;
};

// Textual-content model over already preprocessed documents: builds the
// tf-idf index over the candidates, weights the query against it and ranks
// candidates by cosine similarity. Throws kEmptyCorpus for no candidates.
CandidateList RankTokensByText(PatchId query_id, const TokenSequence& query,
                               std::span<const TextCandidate> candidates);

// Same, starting from the patches' title and description.
CandidateList RankByText(const Patch& query,
                         std::span<const Patch* const> candidates,
                         const StopwordList& stopwords = StopwordList::English());

}  // namespace patchlink

#endif  // PATCHLINK_TEXT_SIMILARITY_H_
