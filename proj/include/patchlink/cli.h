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

#ifndef PATCHLINK_CLI_H_
#define PATCHLINK_CLI_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"

namespace patchlink::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
  std::string patches_path;
  std::string ground_truth_path;
  // Empty: the built-in English list.
  std::string stopwords_path;
  std::vector<double> intervals = {2, 7, 14, 30};
  std::vector<Model> models = {Model::kTextualContent, Model::kLocationCombined,
                               Model::kTextAndLocation};
  int k_max = 10;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::size_t workers = 1;

  // detect: the queries to rank candidates for.
  std::vector<PatchId> queries;
  // evaluate: read CandidateList files from here instead of running detection.
  std::string detections_dir;
  // evaluate: use the 20/80 sample-based dataset instead of time windows.
  bool sample_based = false;
  // evaluate: project label in the report; defaults to the patches file stem.
  std::string project;
};

// Throws Error(kValidation) if intervals are not positive, k_max is outside
// [1, 100], models is empty or workers is 0.
void ValidateRunConfig(const RunConfig& config);

// <query>_<interval>d_<model>.json
std::string DetectionFileName(PatchId query_id, double interval_days, Model model);

// Each command reports progress and diagnostics on `err` and returns an exit
// status: 0 on success, 2 for I/O failures, 1 for everything else.
int Ingest(const RunConfig& config, std::ostream& err);
int Recover(const RunConfig& config, std::ostream& err);
int DetectQueries(const RunConfig& config, std::ostream& err);
int Evaluate(const RunConfig& config, std::ostream& err);
int Impact(const RunConfig& config, std::ostream& err);

}  // namespace patchlink::cli

#endif  // PATCHLINK_CLI_H_
