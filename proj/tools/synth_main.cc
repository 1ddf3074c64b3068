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

// Writes a synthetic review corpus with planted linkages:
// <out>/patches.jsonl and <out>/ground_truth.csv.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "patchlink/patch_io.h"
#include "patchlink/synthetic_corpus.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic patch corpus"};
  patchlink::SyntheticCorpusOptions options;
  std::string out_dir = ".";
  app.add_option("--patches", options.patch_count, "Total patches")->capture_default_str();
  app.add_option("--pairs", options.planted_pairs, "Planted linked pairs")->capture_default_str();
  app.add_option("--span-days", options.span_days, "Time span")->capture_default_str();
  app.add_option("--seed", options.seed, "Random seed")->capture_default_str();
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    const auto corpus = patchlink::GenerateSyntheticCorpus(options);
    std::filesystem::create_directories(out_dir);
    std::ofstream patches(std::filesystem::path(out_dir) / "patches.jsonl");
    for (const auto& patch : corpus.patches) patches << patchlink::PatchToJsonLine(patch) << '\n';
    std::ofstream truth(std::filesystem::path(out_dir) / "ground_truth.csv");
    patchlink::WriteGroundTruth(corpus.ground_truth, truth);
    std::cerr << corpus.patches.size() << " patches, " << corpus.ground_truth.size()
              << " planted linkages\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
