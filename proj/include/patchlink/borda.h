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

#ifndef PATCHLINK_BORDA_H_
#define PATCHLINK_BORDA_H_

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"

namespace patchlink {

struct BordaBallot {
  std::vector<CandidateList> lists;
  // S_i for each list: the number of candidates that list ranks over. For a
  // truncated list this is the truncation size.
  std::vector<std::size_t> list_sizes;
  // created_at of every candidate that appears in any list.
  std::unordered_map<PatchId, Timestamp> tie_times;
};

// A ballot whose sizes are the list lengths.
BordaBallot MakeFullBallot(std::vector<CandidateList> lists,
                           std::unordered_map<PatchId, Timestamp> tie_times);

// Borda count: each candidate scores sum_i (S_i - rank_i), contributing 0
// from lists it is missing from. Output is ordered by score descending, then
// newer patches first, then id ascending.
// Throws kMixedQuery when the lists disagree on the query and kValidation on
// an empty ballot, mismatched sizes or a candidate without a tie time.
CandidateList BordaCombine(const BordaBallot& ballot, Model result_model);

}  // namespace patchlink

#endif  // PATCHLINK_BORDA_H_
