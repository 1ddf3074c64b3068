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

#ifndef PATCHLINK_CANDIDATE_LIST_H_
#define PATCHLINK_CANDIDATE_LIST_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patchlink/patch.h"

namespace patchlink {

enum class Model {
  kTextualContent,      // tc
  kLocationPrefix,      // fl_lcp
  kLocationSuffix,      // fl_lcs
  kLocationSubstring,   // fl_lcsubstr
  kLocationSubsequence, // fl_lcsubseq
  kLocationCombined,    // fl_combined
  kTextAndLocation,     // tc_fl_combined
};

inline constexpr std::array<Model, 7> kAllModels = {
    Model::kTextualContent,      Model::kLocationPrefix,
    Model::kLocationSuffix,      Model::kLocationSubstring,
    Model::kLocationSubsequence, Model::kLocationCombined,
    Model::kTextAndLocation};

std::string_view ModelTag(Model model);
// Throws Error(kValidation) for an unknown tag.
Model ParseModelTag(std::string_view tag);

struct CandidateEntry {
  PatchId candidate_id = 0;
  double score = 0.0;
  // 1-based.
  int rank = 1;

  bool operator==(const CandidateEntry&) const = default;
};

struct CandidateDiagnostics {
  // The candidate window held no patches.
  bool empty_window = false;
  // Candidates scored 0 because they or the query modify no files.
  std::size_t undefined_location_scores = 0;

  bool operator==(const CandidateDiagnostics&) const = default;
};

// Ranked candidates for one query under one model. Ranks run 1..n without
// gaps, scores never increase down the list, and ids are unique.
struct CandidateList {
  PatchId query_id = 0;
  Model model = Model::kTextualContent;
  double interval_days = 0.0;
  std::vector<CandidateEntry> entries;
  CandidateDiagnostics diagnostics;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  // 1-based rank of a candidate, 0 if absent.
  int RankOf(PatchId candidate_id) const;

  bool operator==(const CandidateList&) const = default;
};

struct ScoredCandidate {
  PatchId id = 0;
  double score = 0.0;
  Timestamp created_at = 0;
};

// Total order used by every model: score descending, then newer first, then
// id ascending.
bool RanksBefore(const ScoredCandidate& a, const ScoredCandidate& b);

// Sorts by RanksBefore and assigns ranks 1..n.
CandidateList MakeCandidateList(PatchId query_id, Model model,
                                std::vector<ScoredCandidate> scored);

// First k entries (all of them if the list is shorter).
CandidateList Truncate(const CandidateList& list, std::size_t k);

// Throws Error(kValidation) if the list invariants do not hold.
void ValidateCandidateList(const CandidateList& list);

// {query_id, model, interval_days, entries: [{candidate_id, score, rank}],
//  diagnostics: {empty_window, undefined_location_scores}}
std::string CandidateListToJson(const CandidateList& list);
// Accepts documents without "diagnostics". Throws kParse or kValidation.
CandidateList CandidateListFromJson(std::string_view text);

}  // namespace patchlink

#endif  // PATCHLINK_CANDIDATE_LIST_H_
