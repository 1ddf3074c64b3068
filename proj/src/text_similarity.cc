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

#include "patchlink/text_similarity.h"

#include <map>
#include <vector>

#include "patchlink/error.h"
#include "patchlink/tfidf.h"

namespace patchlink {

CandidateList RankTokensByText(PatchId query_id, const TokenSequence& query,
                               std::span<const TextCandidate> candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no candidates to rank");
  }
  std::map<PatchId, TokenSequence> docs;
  for (const auto& candidate : candidates) docs.emplace(candidate.id, *candidate.tokens);
  const TfIdfIndex index = BuildIndex(docs);
  const SparseVector query_vector = index.Vectorize(query);

  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    const double score = Cosine(query_vector, index.doc_vectors().at(candidate.id));
    scored.push_back({candidate.id, score, candidate.created_at});
  }
  return MakeCandidateList(query_id, Model::kTextualContent, std::move(scored));
}

CandidateList RankByText(const Patch& query,
                         std::span<const Patch* const> candidates,
                         const StopwordList& stopwords) {
  const TokenSequence query_tokens = Preprocess(query.TextualContent(), stopwords);
  std::vector<TokenSequence> tokens;
  tokens.reserve(candidates.size());
  for (const Patch* candidate : candidates) {
    tokens.push_back(Preprocess(candidate->TextualContent(), stopwords));
  }
  std::vector<TextCandidate> docs;
  docs.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    docs.push_back({candidates[i]->id, candidates[i]->created_at, &tokens[i]});
  }
  return RankTokensByText(query.id, query_tokens, docs);
}

}  // namespace patchlink
