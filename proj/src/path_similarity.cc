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

#include "patchlink/path_similarity.h"

#include <algorithm>
#include <unordered_map>

#include "patchlink/borda.h"
#include "patchlink/error.h"

namespace patchlink {

PathComponents SplitPath(std::string_view path) {
  PathComponents out;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t slash = path.find('/', start);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > start) out.parts.emplace_back(path.substr(start, slash - start));
    start = slash + 1;
  }
  if (out.parts.empty()) {
    throw Error(ErrorCode::kValidation,
                "path '" + std::string(path) + "' has no components");
  }
  return out;
}

std::string_view LcxKindName(LcxKind kind) {
  switch (kind) {
    case LcxKind::kPrefix: return "LCP";
    case LcxKind::kSuffix: return "LCS";
    case LcxKind::kSubstring: return "LCSubstr";
    case LcxKind::kSubsequence: return "LCSubseq";
  }
  return "LCP";
}

Model LocationModel(LcxKind kind) {
  switch (kind) {
    case LcxKind::kPrefix: return Model::kLocationPrefix;
    case LcxKind::kSuffix: return Model::kLocationSuffix;
    case LcxKind::kSubstring: return Model::kLocationSubstring;
    case LcxKind::kSubsequence: return Model::kLocationSubsequence;
  }
  return Model::kLocationPrefix;
}

namespace {

std::size_t CommonPrefix(std::span<const std::string> a, std::span<const std::string> b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

std::size_t CommonSuffix(std::span<const std::string> a, std::span<const std::string> b) {
  const auto [ia, ib] = std::mismatch(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  return static_cast<std::size_t>(ia - a.rbegin());
}

// run[j] holds the length of the common run ending at a[i-1], b[j-1].
std::size_t CommonSubstring(std::span<const std::string> a,
                            std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> run(b.size() + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      run[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, run[j]);
    }
    std::swap(prev, run);
  }
  return best;
}

std::size_t CommonSubsequence(std::span<const std::string> a,
                              std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      row[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
    }
    std::swap(prev, row);
  }
  return prev[b.size()];
}

}  // namespace

std::size_t Lcx(LcxKind kind, std::span<const std::string> a,
                std::span<const std::string> b) {
  switch (kind) {
    case LcxKind::kPrefix: return CommonPrefix(a, b);
    case LcxKind::kSuffix: return CommonSuffix(a, b);
    case LcxKind::kSubstring: return CommonSubstring(a, b);
    case LcxKind::kSubsequence: return CommonSubsequence(a, b);
  }
  return 0;
}

double FilePathSimilarity(LcxKind kind, const PathComponents& a,
                          const PathComponents& b) {
  const std::size_t longest = std::max(a.length(), b.length());
  if (longest == 0) return 0.0;
  return static_cast<double>(Lcx(kind, a, b)) / static_cast<double>(longest);
}

double LocationSimilarity(LcxKind kind, std::span<const PathComponents> query_files,
                          std::span<const PathComponents> candidate_files) {
  if (query_files.empty() || candidate_files.empty()) {
    throw Error(ErrorCode::kUndefinedSimilarity,
                "location similarity needs at least one file on each side");
  }
  double sum = 0.0;
  for (const auto& f : query_files) {
    for (const auto& g : candidate_files) sum += FilePathSimilarity(kind, f, g);
  }
  return sum / static_cast<double>(query_files.size() * candidate_files.size());
}

std::vector<PathComponents> SplitPatchFiles(const Patch& patch) {
  std::vector<PathComponents> files;
  files.reserve(patch.file_paths.size());
  for (const auto& path : patch.file_paths) files.push_back(SplitPath(path));
  return files;
}

double PatchLocationSimilarity(LcxKind kind, const Patch& a, const Patch& b) {
  return LocationSimilarity(kind, SplitPatchFiles(a), SplitPatchFiles(b));
}

CandidateList RankFilesByLocation(LcxKind kind, PatchId query_id,
                                  std::span<const PathComponents> query_files,
                                  std::span<const LocationCandidate> candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no candidates to rank");
  }
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  std::size_t undefined = 0;
  for (const auto& candidate : candidates) {
    double score = 0.0;
    if (query_files.empty() || candidate.files->empty()) {
      ++undefined;
    } else {
      score = LocationSimilarity(kind, query_files, *candidate.files);
    }
    scored.push_back({candidate.id, score, candidate.created_at});
  }
  CandidateList list = MakeCandidateList(query_id, LocationModel(kind), std::move(scored));
  list.diagnostics.undefined_location_scores = undefined;
  return list;
}

CandidateList CombineLocationRankings(PatchId query_id,
                                      std::span<const PathComponents> query_files,
                                      std::span<const LocationCandidate> candidates) {
  std::vector<CandidateList> lists;
  for (LcxKind kind : kAllLcxKinds) {
    lists.push_back(RankFilesByLocation(kind, query_id, query_files, candidates));
  }
  std::unordered_map<PatchId, Timestamp> tie_times;
  for (const auto& candidate : candidates) tie_times.emplace(candidate.id, candidate.created_at);
  return BordaCombine(MakeFullBallot(std::move(lists), std::move(tie_times)),
                      Model::kLocationCombined);
}

namespace {

struct LocationInputs {
  std::vector<PathComponents> query_files;
  std::vector<std::vector<PathComponents>> files;
  std::vector<LocationCandidate> candidates;
};

LocationInputs PrepareLocationInputs(const Patch& query,
                                     std::span<const Patch* const> candidates) {
  LocationInputs inputs;
  inputs.query_files = SplitPatchFiles(query);
  inputs.files.reserve(candidates.size());
  for (const Patch* candidate : candidates) inputs.files.push_back(SplitPatchFiles(*candidate));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    inputs.candidates.push_back(
        {candidates[i]->id, candidates[i]->created_at, &inputs.files[i]});
  }
  return inputs;
}

}  // namespace

CandidateList RankByLocation(LcxKind kind, const Patch& query,
                             std::span<const Patch* const> candidates) {
  const LocationInputs inputs = PrepareLocationInputs(query, candidates);
  return RankFilesByLocation(kind, query.id, inputs.query_files, inputs.candidates);
}

CandidateList CombinedLocationRank(const Patch& query,
                                   std::span<const Patch* const> candidates) {
  const LocationInputs inputs = PrepareLocationInputs(query, candidates);
  return CombineLocationRankings(query.id, inputs.query_files, inputs.candidates);
}

}  // namespace patchlink
