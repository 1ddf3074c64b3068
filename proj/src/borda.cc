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

#include "patchlink/borda.h"

#include <algorithm>
#include <map>

#include "patchlink/error.h"

namespace patchlink {

BordaBallot MakeFullBallot(std::vector<CandidateList> lists,
                           std::unordered_map<PatchId, Timestamp> tie_times) {
  BordaBallot ballot;
  for (const auto& list : lists) ballot.list_sizes.push_back(list.size());
  ballot.lists = std::move(lists);
  ballot.tie_times = std::move(tie_times);
  return ballot;
}

CandidateList BordaCombine(const BordaBallot& ballot, Model result_model) {
  if (ballot.lists.empty()) {
    throw Error(ErrorCode::kValidation, "Borda ballot has no lists");
  }
  if (ballot.list_sizes.size() != ballot.lists.size()) {
    throw Error(ErrorCode::kValidation, "Borda ballot sizes do not match its lists");
  }
  const PatchId query_id = ballot.lists.front().query_id;
  // Ordered map so accumulation order, and therefore the result, never
  // depends on hashing.
  std::map<PatchId, double> scores;
  for (std::size_t i = 0; i < ballot.lists.size(); ++i) {
    const CandidateList& list = ballot.lists[i];
    if (list.query_id != query_id) {
      throw Error(ErrorCode::kMixedQuery,
                  "Borda ballot mixes queries " + std::to_string(query_id) +
                      " and " + std::to_string(list.query_id));
    }
    const auto size = static_cast<double>(ballot.list_sizes[i]);
    for (const auto& entry : list.entries) {
      scores[entry.candidate_id] += size - static_cast<double>(entry.rank);
    }
  }

  std::vector<ScoredCandidate> scored;
  scored.reserve(scores.size());
  for (const auto& [id, score] : scores) {
    const auto time = ballot.tie_times.find(id);
    if (time == ballot.tie_times.end()) {
      throw Error(ErrorCode::kValidation,
                  "no creation time for candidate " + std::to_string(id));
    }
    scored.push_back({id, score, time->second});
  }
  CandidateList combined = MakeCandidateList(query_id, result_model, std::move(scored));
  combined.interval_days = ballot.lists.front().interval_days;
  for (const auto& list : ballot.lists) {
    combined.diagnostics.empty_window |= list.diagnostics.empty_window;
    combined.diagnostics.undefined_location_scores =
        std::max(combined.diagnostics.undefined_location_scores,
                 list.diagnostics.undefined_location_scores);
  }
  return combined;
}

}  // namespace patchlink
