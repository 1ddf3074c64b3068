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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles/borda_oracle.h"
#include "oracles/lcx_oracle.h"
#include "patchlink/error.h"
#include "patchlink/path_similarity.h"
#include "test_support.h"

namespace patchlink {
namespace {

using testing::MakePatch;

std::size_t LcxOf(LcxKind kind, std::string_view a, std::string_view b) {
  return Lcx(kind, SplitPath(a), SplitPath(b));
}

TEST(SplitPath, DropsEmptySegments) {
  EXPECT_EQ(SplitPath("/a//b/c.txt").parts, (std::vector<std::string>{"a", "b", "c.txt"}));
  EXPECT_EQ(SplitPath("Undo.pro").parts, (std::vector<std::string>{"Undo.pro"}));
  EXPECT_THROW(SplitPath(""), Error);
  EXPECT_THROW(SplitPath("//"), Error);
}

TEST(Lcx, PrintedExamples) {
  EXPECT_EQ(LcxOf(LcxKind::kPrefix, "src/com/android/settings/LocationSettings.java",
                  "src/com/android/settings/Utils.java"),
            4u);
  EXPECT_EQ(LcxOf(LcxKind::kSuffix, "src/imports/undo/undo.pro", "tests/auto/undo/undo.pro"),
            2u);
  EXPECT_EQ(LcxOf(LcxKind::kSubstring, "res/layout/bluetooth_pin_entry.xml",
                  "tests/res/layout/operator_main.xml"),
            2u);
  EXPECT_EQ(LcxOf(LcxKind::kSubsequence,
                  "apps/CtsVerifier/src/com/android/cts/verifier/sensors/"
                  "MagnetometerTestActivity.java",
                  "tests/tests/hardware/src/android/hardware/cts/SensorTest.java"),
            3u);
}

TEST(Lcx, SelfComparisonIsLength) {
  const PathComponents a = SplitPath("x/y/z/w.cc");
  for (LcxKind kind : kAllLcxKinds) EXPECT_EQ(Lcx(kind, a, a), 4u);
}

TEST(Lcx, CaseSensitiveComponents) {
  EXPECT_EQ(LcxOf(LcxKind::kPrefix, "Src/a", "src/a"), 0u);
  EXPECT_EQ(LcxOf(LcxKind::kSubsequence, "Src/a", "src/a"), 1u);
}

TEST(FilePathSimilarity, Examples) {
  EXPECT_DOUBLE_EQ(
      FilePathSimilarity(LcxKind::kPrefix,
                         SplitPath("src/com/android/settings/LocationSettings.java"),
                         SplitPath("src/com/android/settings/Utils.java")),
      0.8);
  for (LcxKind kind : kAllLcxKinds) {
    EXPECT_EQ(FilePathSimilarity(kind, SplitPath("a/b/c"), SplitPath("a/b/c")), 1.0);
    EXPECT_EQ(FilePathSimilarity(kind, SplitPath("a"), SplitPath("b")), 0.0);
  }
}

TEST(LocationSimilarity, MeanOverCrossProduct) {
  const Patch one = MakePatch(1, 0, {"a/b.c"});
  EXPECT_EQ(PatchLocationSimilarity(LcxKind::kSubsequence, one, one), 1.0);
  const Patch n = MakePatch(2, 0, {"a/x", "a/y"});
  const Patch i = MakePatch(3, 0, {"a/x"});
  EXPECT_DOUBLE_EQ(PatchLocationSimilarity(LcxKind::kPrefix, n, i), 0.75);
}

TEST(LocationSimilarity, IdenticalMultiFileSetsAverageBelowOne) {
  const Patch a = MakePatch(1, 0, {"src/ui/undo.cc", "src/ui/undo.h"});
  // the two cross pairs share only src/ui, 2 of 3 components
  EXPECT_DOUBLE_EQ(PatchLocationSimilarity(LcxKind::kPrefix, a, a),
                   (1.0 + 2.0 / 3.0 + 2.0 / 3.0 + 1.0) / 4.0);
}

TEST(LocationSimilarity, ThreeByTwoMatchesBruteMean) {
  const Patch n = MakePatch(1, 0, {"src/a/b.cc", "src/a/c.cc", "doc/a/b.md"});
  const Patch i = MakePatch(2, 0, {"src/a/b.cc", "test/a/b.cc"});
  for (LcxKind kind : kAllLcxKinds) {
    double sum = 0.0;
    for (const auto& f : n.file_paths) {
      for (const auto& g : i.file_paths) {
        const auto a = SplitPath(f).parts;
        const auto b = SplitPath(g).parts;
        std::size_t common = 0;
        switch (kind) {
          case LcxKind::kPrefix: common = oracle::BrutePrefix(a, b); break;
          case LcxKind::kSuffix: common = oracle::BruteSuffix(a, b); break;
          case LcxKind::kSubstring: common = oracle::BruteSubstring(a, b); break;
          case LcxKind::kSubsequence: common = oracle::BruteSubsequence(a, b); break;
        }
        sum += static_cast<double>(common) / static_cast<double>(std::max(a.size(), b.size()));
      }
    }
    EXPECT_NEAR(PatchLocationSimilarity(kind, n, i), sum / 6.0, 1e-12) << LcxKindName(kind);
  }
}

TEST(LocationSimilarity, ZeroFilesUndefined) {
  const Patch empty = MakePatch(1, 0, {});
  const Patch other = MakePatch(2, 0, {"a"});
  try {
    PatchLocationSimilarity(LcxKind::kPrefix, empty, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedSimilarity);
  }
}

// All sequences over {a, b, c} with lengths 1..max_len.
std::vector<oracle::Components> AllSequences(std::size_t max_len) {
  std::vector<oracle::Components> out;
  std::vector<oracle::Components> level = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<oracle::Components> next;
    for (const auto& seq : level) {
      for (const char* symbol : {"a", "b", "c"}) {
        auto extended = seq;
        extended.push_back(symbol);
        next.push_back(std::move(extended));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

TEST(LcxProperty, DynamicProgrammingMatchesEnumeration) {
  const auto sequences = AllSequences(4);
  for (const auto& a : sequences) {
    for (const auto& b : sequences) {
      ASSERT_EQ(Lcx(LcxKind::kSubstring, a, b), oracle::BruteSubstring(a, b));
      ASSERT_EQ(Lcx(LcxKind::kSubsequence, a, b), oracle::BruteSubsequence(a, b));
      ASSERT_EQ(Lcx(LcxKind::kPrefix, a, b), oracle::BrutePrefix(a, b));
      ASSERT_EQ(Lcx(LcxKind::kSuffix, a, b), oracle::BruteSuffix(a, b));
    }
  }
}

TEST(LcxProperty, BoundsSymmetryAndDominance) {
  const auto sequences = AllSequences(4);
  for (const auto& a : sequences) {
    for (const auto& b : sequences) {
      const std::size_t lcp = Lcx(LcxKind::kPrefix, a, b);
      const std::size_t lcs = Lcx(LcxKind::kSuffix, a, b);
      const std::size_t substr = Lcx(LcxKind::kSubstring, a, b);
      const std::size_t subseq = Lcx(LcxKind::kSubsequence, a, b);
      ASSERT_LE(subseq, std::min(a.size(), b.size()));
      ASSERT_GE(subseq, substr);
      ASSERT_GE(substr, std::max(lcp, lcs));
      ASSERT_EQ(substr, Lcx(LcxKind::kSubstring, b, a));
      ASSERT_EQ(subseq, Lcx(LcxKind::kSubsequence, b, a));
      const oracle::Components ra(a.rbegin(), a.rend());
      const oracle::Components rb(b.rbegin(), b.rend());
      ASSERT_EQ(lcp, Lcx(LcxKind::kSuffix, ra, rb));

      const PathComponents pa{a};
      const PathComponents pb{b};
      for (LcxKind kind : kAllLcxKinds) {
        ASSERT_EQ(FilePathSimilarity(kind, pa, pb), FilePathSimilarity(kind, pb, pa));
      }
      const bool identical = a == b;
      ASSERT_EQ(FilePathSimilarity(LcxKind::kSubsequence, pa, pb) == 1.0, identical);
      ASSERT_EQ(FilePathSimilarity(LcxKind::kPrefix, pa, pb) == 1.0, identical);
    }
  }
}

std::vector<const Patch*> Pointers(const std::vector<Patch>& patches) {
  std::vector<const Patch*> out;
  for (const auto& p : patches) out.push_back(&p);
  return out;
}

TEST(RankByLocation, PlantedDuplicateWins) {
  const Patch query = MakePatch(10, 1000, {"src/ui/undo.cc"});
  const std::vector<Patch> candidates = {MakePatch(1, 100, {"docs/readme.md"}),
                                         MakePatch(2, 50, {"src/ui/undo.cc"}),
                                         MakePatch(3, 300, {"build/ci.yml"})};
  for (LcxKind kind : kAllLcxKinds) {
    const CandidateList list = RankByLocation(kind, query, Pointers(candidates));
    EXPECT_EQ(list.entries[0].candidate_id, 2);
    EXPECT_DOUBLE_EQ(list.entries[0].score, 1.0);
    EXPECT_EQ(list.model, LocationModel(kind));
  }
}

TEST(RankByLocation, DisjointOrderIsNewestFirst) {
  const Patch query = MakePatch(10, 1000, {"q"});
  const std::vector<Patch> candidates = {MakePatch(1, 100, {"a"}), MakePatch(2, 300, {"b"}),
                                         MakePatch(3, 300, {"c"})};
  const CandidateList list = RankByLocation(LcxKind::kSubsequence, query, Pointers(candidates));
  std::vector<PatchId> ids;
  for (const auto& e : list.entries) ids.push_back(e.candidate_id);
  EXPECT_EQ(ids, (std::vector<PatchId>{2, 3, 1}));
}

TEST(RankByLocation, ZeroFileCandidateScoresZeroWithDiagnostic) {
  const Patch query = MakePatch(10, 1000, {"a/b"});
  const std::vector<Patch> candidates = {MakePatch(1, 100, {}), MakePatch(2, 200, {"a/b"})};
  const CandidateList list = RankByLocation(LcxKind::kPrefix, query, Pointers(candidates));
  EXPECT_EQ(list.entries[1].candidate_id, 1);
  EXPECT_EQ(list.entries[1].score, 0.0);
  EXPECT_EQ(list.diagnostics.undefined_location_scores, 1u);
  EXPECT_THROW(RankByLocation(LcxKind::kPrefix, query, std::vector<const Patch*>{}), Error);
}

std::string RandomPath(std::mt19937_64& rng) {
  static const char* kParts[] = {"src", "lib", "ui", "core", "test", "a.cc", "b.h"};
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> part(0, 6);
  std::string path;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) path += (i ? "/" : "") + std::string(kParts[part(rng)]);
  return path;
}

Patch RandomPatch(std::mt19937_64& rng, PatchId id) {
  std::vector<std::string> files;
  std::uniform_int_distribution<int> count(1, 3);
  const int n = count(rng);
  while (static_cast<int>(files.size()) < n) {
    std::string path = RandomPath(rng);
    if (std::find(files.begin(), files.end(), path) == files.end()) files.push_back(path);
  }
  return MakePatch(id, static_cast<Timestamp>(rng() % 4), files);
}

TEST(RankByLocation, RandomInstancesMatchBruteForce) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Patch query = RandomPatch(rng, 100);
    std::vector<Patch> candidates;
    for (int i = 1; i <= 6; ++i) candidates.push_back(RandomPatch(rng, i));
    std::map<std::int64_t, std::int64_t> created;
    for (const auto& c : candidates) created[c.id] = c.created_at;
    std::vector<oracle::Vote> votes;
    for (LcxKind kind : kAllLcxKinds) {
      struct Row { PatchId id; double score; Timestamp t; };
      std::vector<Row> rows;
      for (const auto& c : candidates) {
        double sum = 0.0;
        for (const auto& f : query.file_paths) {
          for (const auto& g : c.file_paths) {
            const auto a = SplitPath(f).parts;
            const auto b = SplitPath(g).parts;
            std::size_t common = 0;
            switch (kind) {
              case LcxKind::kPrefix: common = oracle::BrutePrefix(a, b); break;
              case LcxKind::kSuffix: common = oracle::BruteSuffix(a, b); break;
              case LcxKind::kSubstring: common = oracle::BruteSubstring(a, b); break;
              case LcxKind::kSubsequence: common = oracle::BruteSubsequence(a, b); break;
            }
            sum += static_cast<double>(common) / static_cast<double>(std::max(a.size(), b.size()));
          }
        }
        rows.push_back({c.id, sum / static_cast<double>(query.file_paths.size() *
                                                        c.file_paths.size()), c.created_at});
      }
      std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.score != y.score) return x.score > y.score;
        if (x.t != y.t) return x.t > y.t;
        return x.id < y.id;
      });
      const CandidateList list = RankByLocation(kind, query, Pointers(candidates));
      oracle::Vote vote{{}, 6};
      for (std::size_t r = 0; r < rows.size(); ++r) {
        ASSERT_EQ(list.entries[r].candidate_id, rows[r].id) << "trial " << trial;
        vote.order.push_back(rows[r].id);
      }
      votes.push_back(std::move(vote));
    }
    const auto expected = oracle::BruteBorda(votes, created);
    const CandidateList combined = CombinedLocationRank(query, Pointers(candidates));
    ASSERT_EQ(combined.size(), expected.size());
    for (std::size_t r = 0; r < expected.size(); ++r) {
      EXPECT_EQ(combined.entries[r].candidate_id, expected[r].id);
      EXPECT_EQ(combined.entries[r].score, expected[r].score);
    }
  }
}

TEST(CombinedLocationRank, UnanimousListsKeepOrder) {
  const Patch query = MakePatch(10, 1000, {"a/b/c/d"});
  const std::vector<Patch> candidates = {MakePatch(1, 100, {"a/b/c/d"}),
                                         MakePatch(2, 200, {"a/b/x/d"}),
                                         MakePatch(3, 300, {"z/y/x/w"})};
  const CandidateList combined = CombinedLocationRank(query, Pointers(candidates));
  std::vector<PatchId> ids;
  for (const auto& e : combined.entries) ids.push_back(e.candidate_id);
  EXPECT_EQ(ids, (std::vector<PatchId>{1, 2, 3}));
  EXPECT_EQ(combined.model, Model::kLocationCombined);
}

}  // namespace
}  // namespace patchlink
