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

// patchlink: patch linkage recovery, detection and evaluation.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patchlink/cli.h"
#include "patchlink/error.h"

namespace {

using patchlink::cli::RunConfig;

void AddCommonFlags(CLI::App* command, RunConfig& config) {
  command->add_option("--patches", config.patches_path, "Patch records (JSON lines)");
  command->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
}

void AddDetectionFlags(CLI::App* command, RunConfig& config,
                       std::vector<std::string>& model_tags) {
  command->add_option("--stopwords", config.stopwords_path,
                      "Stopword file, one word per line (default: built-in list)");
  command->add_option("--intervals", config.intervals, "Window sizes in days")
      ->delimiter(',')
      ->capture_default_str();
  command->add_option("--models", model_tags,
                      "Model tags: tc, fl_lcp, fl_lcs, fl_lcsubstr, fl_lcsubseq, "
                      "fl_combined, tc_fl_combined")
      ->delimiter(',');
  command->add_option("--workers", config.workers, "Worker threads")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect and evaluate linkages between code review patches"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> model_tags;

  auto* ingest = app.add_subcommand("ingest", "Validate patches and write a normalized store");
  AddCommonFlags(ingest, config);

  auto* recover = app.add_subcommand("recover", "Recover linkages from review discussions");
  AddCommonFlags(recover, config);

  auto* detect = app.add_subcommand("detect", "Rank linkage candidates for query patches");
  AddCommonFlags(detect, config);
  AddDetectionFlags(detect, config, model_tags);
  detect->add_option("queries", config.queries, "Query patch ids")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Compute Recall@k, Precision@k and MRR@k");
  AddCommonFlags(evaluate, config);
  AddDetectionFlags(evaluate, config, model_tags);
  evaluate->add_option("--ground-truth", config.ground_truth_path, "Ground-truth CSV");
  evaluate->add_option("--k-max", config.k_max, "Largest cut-off k")->capture_default_str();
  evaluate->add_option("--seed", config.seed, "Seed for the sample-based dataset")
      ->capture_default_str();
  evaluate->add_flag("--sample-based", config.sample_based,
                     "Use the 20% linked / 80% unlinked dataset instead of time windows");
  evaluate->add_option("--detections", config.detections_dir,
                       "Read candidate lists written by 'detect' from this directory");
  evaluate->add_option("--project", config.project, "Project label for report rows");

  auto* impact = app.add_subcommand("impact", "Review-process impact metrics and tests");
  AddCommonFlags(impact, config);
  impact->add_option("--ground-truth", config.ground_truth_path, "Ground-truth CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : patchlink::cli::kExitFailure;
  }

  if (!model_tags.empty()) {
    config.models.clear();
    try {
      for (const auto& tag : model_tags) config.models.push_back(patchlink::ParseModelTag(tag));
    } catch (const patchlink::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return patchlink::cli::kExitFailure;
    }
  }

  if (ingest->parsed()) return patchlink::cli::Ingest(config, std::cerr);
  if (recover->parsed()) return patchlink::cli::Recover(config, std::cerr);
  if (detect->parsed()) return patchlink::cli::DetectQueries(config, std::cerr);
  if (evaluate->parsed()) return patchlink::cli::Evaluate(config, std::cerr);
  if (impact->parsed()) return patchlink::cli::Impact(config, std::cerr);
  return patchlink::cli::kExitFailure;
}
