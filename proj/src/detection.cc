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

#include "patchlink/detection.h"

#include "patchlink/borda.h"
#include "patchlink/dataset.h"
#include "patchlink/text_similarity.h"

namespace patchlink {

DetectionContext::DetectionContext(const PatchStore& store,
                                   const StopwordList& stopwords)
    : store_(store) {
  tokens_.reserve(store.size());
  files_.reserve(store.size());
  for (const auto& patch : store.ByTime()) {
    tokens_.emplace(patch.id, Preprocess(patch.TextualContent(), stopwords));
    files_.emplace(patch.id, SplitPatchFiles(patch));
  }
}

namespace {

CandidateList RankText(const DetectionContext& context, PatchId query_id,
                       std::span<const Patch* const> candidates) {
  std::vector<TextCandidate> docs;
  docs.reserve(candidates.size());
  for (const Patch* c : candidates) {
    docs.push_back({c->id, c->created_at, &context.Tokens(c->id)});
  }
  return RankTokensByText(query_id, context.Tokens(query_id), docs);
}

std::vector<LocationCandidate> LocationCandidates(
    const DetectionContext& context, std::span<const Patch* const> candidates) {
  std::vector<LocationCandidate> out;
  out.reserve(candidates.size());
  for (const Patch* c : candidates) {
    out.push_back({c->id, c->created_at, &context.Files(c->id)});
  }
  return out;
}

}  // namespace

CandidateList DetectAmong(const DetectionContext& context, PatchId query_id,
                          std::span<const Patch* const> candidates, Model model) {
  context.store().At(query_id);
  if (candidates.empty()) {
    CandidateList empty;
    empty.query_id = query_id;
    empty.model = model;
    empty.diagnostics.empty_window = true;
    return empty;
  }
  const auto& query_files = context.Files(query_id);
  switch (model) {
    case Model::kTextualContent:
      return RankText(context, query_id, candidates);
    case Model::kLocationPrefix:
    case Model::kLocationSuffix:
    case Model::kLocationSubstring:
    case Model::kLocationSubsequence: {
      const LcxKind kind = model == Model::kLocationPrefix   ? LcxKind::kPrefix
                           : model == Model::kLocationSuffix ? LcxKind::kSuffix
                           : model == Model::kLocationSubstring
                               ? LcxKind::kSubstring
                               : LcxKind::kSubsequence;
      return RankFilesByLocation(kind, query_id, query_files,
                                 LocationCandidates(context, candidates));
    }
    case Model::kLocationCombined:
      return CombineLocationRankings(query_id, query_files,
                                     LocationCandidates(context, candidates));
    case Model::kTextAndLocation: {
      const CandidateList text = RankText(context, query_id, candidates);
      const CandidateList location = CombineLocationRankings(
          query_id, query_files, LocationCandidates(context, candidates));
      BordaBallot ballot;
      ballot.lists = {Truncate(text, kFeatureCombinationDepth),
                      Truncate(location, kFeatureCombinationDepth)};
      ballot.list_sizes = {kFeatureCombinationDepth, kFeatureCombinationDepth};
      for (const Patch* c : candidates) ballot.tie_times.emplace(c->id, c->created_at);
      return BordaCombine(ballot, Model::kTextAndLocation);
    }
  }
  return {};
}

CandidateList Detect(const DetectionContext& context, PatchId query_id,
                     double interval_days, Model model) {
  const auto window = CandidateWindow(context.store(), query_id, interval_days);
  CandidateList list = DetectAmong(context, query_id, window, model);
  list.interval_days = interval_days;
  return list;
}

}  // namespace patchlink
