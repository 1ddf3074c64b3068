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

#include "patchlink/candidate_list.h"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"
#include "patchlink/error.h"

namespace patchlink {

std::string_view ModelTag(Model model) {
  switch (model) {
    case Model::kTextualContent: return "tc";
    case Model::kLocationPrefix: return "fl_lcp";
    case Model::kLocationSuffix: return "fl_lcs";
    case Model::kLocationSubstring: return "fl_lcsubstr";
    case Model::kLocationSubsequence: return "fl_lcsubseq";
    case Model::kLocationCombined: return "fl_combined";
    case Model::kTextAndLocation: return "tc_fl_combined";
  }
  return "tc";
}

Model ParseModelTag(std::string_view tag) {
  for (Model model : kAllModels) {
    if (ModelTag(model) == tag) return model;
  }
  throw Error(ErrorCode::kValidation, "unknown model tag '" + std::string(tag) + "'");
}

int CandidateList::RankOf(PatchId candidate_id) const {
  for (const auto& entry : entries) {
    if (entry.candidate_id == candidate_id) return entry.rank;
  }
  return 0;
}

bool RanksBefore(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.created_at != b.created_at) return a.created_at > b.created_at;
  return a.id < b.id;
}

CandidateList MakeCandidateList(PatchId query_id, Model model,
                                std::vector<ScoredCandidate> scored) {
  std::sort(scored.begin(), scored.end(), RanksBefore);
  CandidateList list;
  list.query_id = query_id;
  list.model = model;
  list.entries.reserve(scored.size());
  for (std::size_t i = 0; i < scored.size(); ++i) {
    list.entries.push_back({scored[i].id, scored[i].score, static_cast<int>(i + 1)});
  }
  return list;
}

CandidateList Truncate(const CandidateList& list, std::size_t k) {
  CandidateList out = list;
  if (out.entries.size() > k) out.entries.resize(k);
  return out;
}

void ValidateCandidateList(const CandidateList& list) {
  std::unordered_set<PatchId> seen;
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    const auto& entry = list.entries[i];
    if (entry.rank != static_cast<int>(i + 1)) {
      throw Error(ErrorCode::kValidation, "candidate ranks must run 1..n");
    }
    if (i > 0 && entry.score > list.entries[i - 1].score) {
      throw Error(ErrorCode::kValidation, "candidate scores must not increase");
    }
    if (!seen.insert(entry.candidate_id).second) {
      throw Error(ErrorCode::kValidation,
                  "candidate " + std::to_string(entry.candidate_id) + " listed twice");
    }
  }
}

std::string CandidateListToJson(const CandidateList& list) {
  nlohmann::ordered_json out;
  out["query_id"] = list.query_id;
  out["model"] = ModelTag(list.model);
  out["interval_days"] = list.interval_days;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& entry : list.entries) {
    nlohmann::ordered_json item;
    item["candidate_id"] = entry.candidate_id;
    item["score"] = entry.score;
    item["rank"] = entry.rank;
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  out["diagnostics"] = {
      {"empty_window", list.diagnostics.empty_window},
      {"undefined_location_scores", list.diagnostics.undefined_location_scores}};
  return out.dump();
}

CandidateList CandidateListFromJson(std::string_view text) {
  CandidateList list;
  try {
    const auto doc = nlohmann::json::parse(text);
    list.query_id = doc.at("query_id").get<PatchId>();
    list.model = ParseModelTag(doc.at("model").get<std::string>());
    list.interval_days = doc.at("interval_days").get<double>();
    for (const auto& item : doc.at("entries")) {
      list.entries.push_back({item.at("candidate_id").get<PatchId>(),
                              item.at("score").get<double>(),
                              item.at("rank").get<int>()});
    }
    if (const auto diag = doc.find("diagnostics"); diag != doc.end()) {
      list.diagnostics.empty_window = diag->value("empty_window", false);
      list.diagnostics.undefined_location_scores =
          diag->value("undefined_location_scores", std::size_t{0});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("candidate list: ") + e.what());
  }
  ValidateCandidateList(list);
  return list;
}

}  // namespace patchlink
