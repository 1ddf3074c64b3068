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

#ifndef PATCHLINK_PATH_SIMILARITY_H_
#define PATCHLINK_PATH_SIMILARITY_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"

namespace patchlink {

// A file path split on '/'. Empty segments are dropped; the file name is the
// last component.
struct PathComponents {
  std::vector<std::string> parts;

  std::size_t length() const { return parts.size(); }
  bool operator==(const PathComponents&) const = default;
};

// Throws Error(kValidation) if the path has no components.
PathComponents SplitPath(std::string_view path);

enum class LcxKind {
  kPrefix,       // LCP
  kSuffix,       // LCS
  kSubstring,    // LCSubstr
  kSubsequence,  // LCSubseq
};

inline constexpr std::array<LcxKind, 4> kAllLcxKinds = {
    LcxKind::kPrefix, LcxKind::kSuffix, LcxKind::kSubstring,
    LcxKind::kSubsequence};

std::string_view LcxKindName(LcxKind kind);
Model LocationModel(LcxKind kind);

// Length, in components, of the longest common prefix / suffix / contiguous
// run / in-order subsequence. Components compare by exact string equality.
std::size_t Lcx(LcxKind kind, std::span<const std::string> a,
                std::span<const std::string> b);
inline std::size_t Lcx(LcxKind kind, const PathComponents& a,
                       const PathComponents& b) {
  return Lcx(kind, a.parts, b.parts);
}

// Lcx normalised by the longer path's component count.
double FilePathSimilarity(LcxKind kind, const PathComponents& a,
                          const PathComponents& b);

// Mean FilePathSimilarity over every (query file, candidate file) pair.
// Throws kUndefinedSimilarity if either side has no files.
double LocationSimilarity(LcxKind kind, std::span<const PathComponents> query_files,
                          std::span<const PathComponents> candidate_files);
double PatchLocationSimilarity(LcxKind kind, const Patch& a, const Patch& b);

struct LocationCandidate {
  PatchId id = 0;
  Timestamp created_at = 0;
  const std::vector<PathComponents>* files = nullptr;
};

// File-location model under one comparison function. Candidates whose
// similarity is undefined score 0 and are counted in the diagnostics.
// Throws kEmptyCorpus for no candidates.
CandidateList RankFilesByLocation(LcxKind kind, PatchId query_id,
                                  std::span<const PathComponents> query_files,
                                  std::span<const LocationCandidate> candidates);
CandidateList RankByLocation(LcxKind kind, const Patch& query,
                             std::span<const Patch* const> candidates);

// Borda combination of the four full single-function rankings.
CandidateList CombineLocationRankings(PatchId query_id,
                                      std::span<const PathComponents> query_files,
                                      std::span<const LocationCandidate> candidates);
CandidateList CombinedLocationRank(const Patch& query,
                                   std::span<const Patch* const> candidates);

std::vector<PathComponents> SplitPatchFiles(const Patch& patch);

}  // namespace patchlink

#endif  // PATCHLINK_PATH_SIMILARITY_H_
