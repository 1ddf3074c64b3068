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

#include "patchlink/synthetic_corpus.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "patchlink/error.h"
#include "patchlink/porter_stemmer.h"

namespace patchlink {
namespace {

constexpr Timestamp kEpoch = 1'400'000'000;  // May 2014

class Generator {
 public:
  explicit Generator(const SyntheticCorpusOptions& options)
      : options_(options), rng_(options.seed) {
    BuildVocabulary();
  }

  SyntheticCorpus Run();

 private:
  struct Draft {
    Patch patch;
    // Index of the planted target in drafts_, for duplicates.
    std::optional<std::size_t> duplicate_of;
  };

  std::size_t Uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  double UniformReal(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  const std::string& Pick(const std::vector<std::string>& items) {
    return items[Uniform(0, items.size() - 1)];
  }

  void BuildVocabulary();
  std::string Words(std::size_t count, std::size_t topic);
  std::string Sentence(std::size_t count, std::size_t topic);
  std::vector<std::string> Files(std::size_t count, const std::string& module);
  std::string ChangeKey();
  Patch Background(Timestamp created_at);
  void FinishReview(Patch& patch);

  SyntheticCorpusOptions options_;
  std::mt19937_64 rng_;
  std::vector<std::string> vocabulary_;
  std::vector<std::string> filler_;
  std::vector<std::string> top_dirs_;
  std::vector<std::string> modules_;
  // Topics cluster patches: each owns a small word pool and two modules.
  std::vector<std::vector<std::string>> topic_words_;
  std::vector<std::vector<std::string>> topic_modules_;
  std::vector<std::string> authors_;
  std::vector<std::string> projects_;
};

void Generator::BuildVocabulary() {
  static constexpr const char* kOnsets[] = {"b", "c", "d", "f", "g", "k", "l", "m",
                                            "n", "p", "r", "s", "t", "v", "z", "br",
                                            "cl", "dr", "gr", "pl", "st", "tr"};
  static constexpr const char* kNuclei[] = {"a", "e", "i", "o", "u", "ai", "ou"};
  static constexpr const char* kCodas[] = {"", "n", "r", "m", "x", "k"};
  std::set<std::string> words;
  while (words.size() < 4000) {
    std::string word;
    const std::size_t syllables = Uniform(2, 3);
    for (std::size_t i = 0; i < syllables; ++i) {
      word += kOnsets[Uniform(0, std::size(kOnsets) - 1)];
      word += kNuclei[Uniform(0, std::size(kNuclei) - 1)];
    }
    word += kCodas[Uniform(0, std::size(kCodas) - 1)];
    // Porter is not idempotent on every word; keep the corpus tokens stable
    // under a second pass.
    const std::string stem = PorterStem(word);
    if (PorterStem(stem) == stem) words.insert(word);
  }
  vocabulary_.assign(words.begin(), words.end());
  std::shuffle(vocabulary_.begin(), vocabulary_.end(), rng_);
  modules_.assign(vocabulary_.begin(), vocabulary_.begin() + 60);
  constexpr std::size_t kTopics = 25;
  constexpr std::size_t kWordsPerTopic = 12;
  for (std::size_t t = 0; t < kTopics; ++t) {
    const auto first = vocabulary_.begin() + 60 + static_cast<std::ptrdiff_t>(t * kWordsPerTopic);
    topic_words_.emplace_back(first, first + kWordsPerTopic);
    topic_modules_.push_back({modules_[2 * t], modules_[2 * t + 1]});
  }

  filler_ = {"the",    "fix",     "add",    "update", "test",    "change",
             "remove", "support", "api",    "this",   "patch",   "should",
             "when",   "error",   "handle", "config", "cleanup", "refactor",
             "for",    "with",    "new",    "use",    "and",     "in"};
  top_dirs_ = {"src", "tests", "docs", "lib", "tools", "api", "res"};
  for (int i = 0; i < 40; ++i) authors_.push_back("dev" + std::to_string(i));
  projects_ = {"nova", "neutron", "qtbase", "settings", "cinder"};
}

std::string Generator::Words(std::size_t count, std::size_t topic) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!out.empty()) out += ' ';
    // Topic words, shared filler and distinctive vocabulary.
    const std::size_t draw = Uniform(0, 9);
    out += draw < 4 ? Pick(topic_words_[topic]) : draw < 6 ? Pick(filler_) : Pick(vocabulary_);
  }
  return out;
}

std::string Generator::Sentence(std::size_t count, std::size_t topic) {
  std::string out = Words(count, topic);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::vector<std::string> Generator::Files(std::size_t count, const std::string& module) {
  std::set<std::string> files;
  static constexpr const char* kExtensions[] = {".py", ".cpp", ".h", ".java", ".xml", ".pro"};
  while (files.size() < count) {
    std::string path = Pick(top_dirs_) + "/" + module;
    const std::size_t depth = Uniform(0, 2);
    for (std::size_t i = 0; i < depth; ++i) path += "/" + Pick(vocabulary_);
    path += "/" + Pick(vocabulary_) + kExtensions[Uniform(0, std::size(kExtensions) - 1)];
    files.insert(path);
  }
  std::vector<std::string> out(files.begin(), files.end());
  std::shuffle(out.begin(), out.end(), rng_);
  return out;
}

std::string Generator::ChangeKey() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string key = "I";
  for (int i = 0; i < 40; ++i) key += kHex[Uniform(0, 15)];
  return key;
}

Patch Generator::Background(Timestamp created_at) {
  Patch patch;
  patch.change_key = ChangeKey();
  patch.project = Pick(projects_);
  patch.author = Pick(authors_);
  patch.created_at = created_at;
  const std::size_t topic = Uniform(0, topic_words_.size() - 1);
  patch.title = Sentence(Uniform(5, 8), topic);
  patch.description = Sentence(Uniform(10, 25), topic) + ".";
  patch.file_paths = Files(Uniform(1, 6), Pick(topic_modules_[topic]));
  return patch;
}

// Adds revisions and a decision after creation time.
void Generator::FinishReview(Patch& patch) {
  patch.revisions = {patch.created_at};
  const std::size_t extra = Uniform(0, 3);
  Timestamp t = patch.created_at;
  for (std::size_t i = 0; i < extra; ++i) {
    t += static_cast<Timestamp>(UniformReal(0.1, 2.0) * kSecondsPerDay);
    patch.revisions.push_back(t);
  }
  const std::size_t outcome = Uniform(0, 9);
  if (outcome < 6) {
    patch.decision.status = DecisionStatus::kMerged;
  } else if (outcome < 9) {
    patch.decision.status = DecisionStatus::kAbandoned;
  }
  if (patch.decision.decided()) {
    patch.decision.time = t + static_cast<Timestamp>(UniformReal(0.0, 3.0) * kSecondsPerDay);
  }
}

SyntheticCorpus Generator::Run() {
  if (options_.patch_count < 2 * options_.planted_pairs || options_.target_files < 2) {
    throw Error(ErrorCode::kValidation, "synthetic corpus options are inconsistent");
  }
  const auto span = options_.span_days * kSecondsPerDay;
  const auto max_gap = options_.max_pair_gap_days * kSecondsPerDay;

  std::vector<Draft> drafts;
  for (std::size_t i = 0; i < options_.planted_pairs; ++i) {
    Draft target{Background(kEpoch + static_cast<Timestamp>(UniformReal(0.0, span - max_gap))), {}};
    // Paths look like <top>/<module>/...; keep the target in its topic's module.
    const std::string& first = target.patch.file_paths.front();
    const std::size_t start = first.find('/') + 1;
    const std::string module = first.substr(start, first.find('/', start) - start);
    target.patch.file_paths = Files(options_.target_files, module);
    Draft duplicate{Background(target.patch.created_at +
                               static_cast<Timestamp>(UniformReal(3600.0, max_gap))),
                    drafts.size()};
    duplicate.patch.title = target.patch.title;
    duplicate.patch.project = target.patch.project;
    while (duplicate.patch.author == target.patch.author) {
      duplicate.patch.author = Pick(authors_);
    }
    auto files = target.patch.file_paths;
    files.erase(files.begin() + static_cast<std::ptrdiff_t>(Uniform(0, files.size() - 1)));
    for (const auto& extra : Files(1, module)) {
      if (std::find(files.begin(), files.end(), extra) == files.end()) files.push_back(extra);
    }
    duplicate.patch.file_paths = std::move(files);
    drafts.push_back(std::move(target));
    drafts.push_back(std::move(duplicate));
  }
  while (drafts.size() < options_.patch_count) {
    drafts.push_back({Background(kEpoch + static_cast<Timestamp>(UniformReal(0.0, span))), {}});
  }

  // Review numbers follow creation order, like a real review server.
  std::vector<std::size_t> order(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return drafts[a].patch.created_at < drafts[b].patch.created_at;
  });
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    drafts[order[rank]].patch.id = static_cast<PatchId>(80000 + rank);
  }

  static constexpr LinkageType kTypes[] = {
      LinkageType::kAlternativeSolution, LinkageType::kAlternativeSolution,
      LinkageType::kBroaderContext, LinkageType::kDependency, LinkageType::kOther};
  SyntheticCorpus corpus;
  std::size_t planted = 0;
  for (std::size_t index : order) {
    Draft& draft = drafts[index];
    Patch& patch = draft.patch;
    FinishReview(patch);
    const std::size_t comments = Uniform(0, 2);
    for (std::size_t c = 0; c < comments; ++c) {
      const Timestamp at = patch.created_at +
                           static_cast<Timestamp>(UniformReal(0.0, 2.0) * kSecondsPerDay);
      const auto revision = std::upper_bound(patch.revisions.begin(),
                                             patch.revisions.end(), at) -
                            patch.revisions.begin();
      patch.comments.push_back(
          {Pick(authors_), at, c == 0 ? "Looks good to me" : Sentence(6, 0),
           static_cast<int>(revision)});
    }
    if (draft.duplicate_of) {
      const Patch& target = drafts[*draft.duplicate_of].patch;
      const Timestamp at = patch.created_at +
                           static_cast<Timestamp>(UniformReal(0.0, 3.0) * kSecondsPerDay);
      const auto revision = std::upper_bound(patch.revisions.begin(),
                                             patch.revisions.end(), at) -
                            patch.revisions.begin();
      patch.comments.push_back(
          {"reviewer" + std::to_string(planted % 7), at,
           "similar patch https://review.example.org/#/c/" + std::to_string(target.id) + "/",
           static_cast<int>(revision)});
      std::stable_sort(patch.comments.begin(), patch.comments.end(),
                       [](const Comment& a, const Comment& b) { return a.posted_at < b.posted_at; });
      corpus.ground_truth.push_back({patch.id, target.id,
                                     kTypes[planted % std::size(kTypes)], at,
                                     static_cast<int>(revision)});
      ++planted;
    }
  }
  // Decisions must not precede review comments.
  for (auto& draft : drafts) {
    Patch& patch = draft.patch;
    if (!patch.decision.time) continue;
    for (const auto& comment : patch.comments) {
      patch.decision.time = std::max(*patch.decision.time, comment.posted_at);
    }
    corpus.patches.push_back(patch);
  }
  for (auto& draft : drafts) {
    if (!draft.patch.decision.time) corpus.patches.push_back(draft.patch);
  }
  std::sort(corpus.patches.begin(), corpus.patches.end(),
            [](const Patch& a, const Patch& b) { return a.id < b.id; });
  std::sort(corpus.ground_truth.begin(), corpus.ground_truth.end(),
            [](const GroundTruthEntry& a, const GroundTruthEntry& b) {
              return a.source_id < b.source_id;
            });
  return corpus;
}

}  // namespace

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticCorpusOptions& options) {
  return Generator(options).Run();
}

}  // namespace patchlink
