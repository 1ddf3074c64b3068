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

#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles/borda_oracle.h"
#include "patchlink/borda.h"
#include "patchlink/error.h"

namespace patchlink {
namespace {

constexpr PatchId kA = 1;
constexpr PatchId kB = 2;
constexpr PatchId kC = 3;
constexpr PatchId kD = 4;

CandidateList List(std::vector<PatchId> order, PatchId query = 100) {
  std::vector<ScoredCandidate> scored;
  for (std::size_t i = 0; i < order.size(); ++i) {
    scored.push_back({order[i], static_cast<double>(order.size() - i), 0});
  }
  return MakeCandidateList(query, Model::kTextualContent, std::move(scored));
}

std::vector<PatchId> Order(const CandidateList& list) {
  std::vector<PatchId> ids;
  for (const auto& e : list.entries) ids.push_back(e.candidate_id);
  return ids;
}

TEST(BordaCombine, TwoVotersTieBrokenByRecency) {
  const std::unordered_map<PatchId, Timestamp> older_a = {{kA, 10}, {kB, 20}, {kC, 30}};
  const CandidateList combined = BordaCombine(
      MakeFullBallot({List({kA, kB, kC}), List({kB, kA, kC})}, older_a),
      Model::kLocationCombined);
  ASSERT_EQ(combined.size(), 3u);
  EXPECT_EQ(Order(combined), (std::vector<PatchId>{kB, kA, kC}));
  EXPECT_EQ(combined.entries[0].score, 3.0);
  EXPECT_EQ(combined.entries[1].score, 3.0);
  EXPECT_EQ(combined.entries[2].score, 0.0);

  const std::unordered_map<PatchId, Timestamp> newer_a = {{kA, 40}, {kB, 20}, {kC, 30}};
  EXPECT_EQ(Order(BordaCombine(MakeFullBallot({List({kA, kB, kC}), List({kB, kA, kC})}, newer_a),
                               Model::kLocationCombined)),
            (std::vector<PatchId>{kA, kB, kC}));
}

TEST(BordaCombine, SameTimeFallsBackToId) {
  const std::unordered_map<PatchId, Timestamp> same = {{kA, 5}, {kB, 5}, {kC, 5}};
  EXPECT_EQ(Order(BordaCombine(MakeFullBallot({List({kB, kA, kC}), List({kA, kB, kC})}, same),
                               Model::kLocationCombined)),
            (std::vector<PatchId>{kA, kB, kC}));
}

TEST(BordaCombine, SingleVoterPreservesOrder) {
  const std::unordered_map<PatchId, Timestamp> times = {{kA, 1}, {kB, 2}, {kC, 3}, {kD, 4}};
  EXPECT_EQ(Order(BordaCombine(MakeFullBallot({List({kC, kA, kD, kB})}, times),
                               Model::kLocationCombined)),
            (std::vector<PatchId>{kC, kA, kD, kB}));
}

TEST(BordaCombine, FourAgreeOneDissents) {
  const std::unordered_map<PatchId, Timestamp> times = {{kA, 1}, {kB, 2}, {kC, 3}};
  const CandidateList combined = BordaCombine(
      MakeFullBallot({List({kA, kB, kC}), List({kA, kB, kC}), List({kA, kB, kC}),
                      List({kB, kA, kC})},
                     times),
      Model::kLocationCombined);
  EXPECT_EQ(combined.entries[0].candidate_id, kA);
  EXPECT_EQ(combined.entries[0].score, 7.0);
  EXPECT_EQ(combined.entries[1].score, 5.0);
}

TEST(BordaCombine, TruncatedListAbsentScoresZero) {
  std::vector<PatchId> first;
  std::vector<PatchId> second;
  for (PatchId id = 10; id < 20; ++id) first.push_back(id);   // D = 19 at rank 10
  for (PatchId id = 20; id < 30; ++id) second.push_back(id);
  std::unordered_map<PatchId, Timestamp> times;
  for (PatchId id = 10; id < 30; ++id) times[id] = id;
  BordaBallot ballot;
  ballot.lists = {List(first), List(second)};
  ballot.list_sizes = {10, 10};
  ballot.tie_times = times;
  const CandidateList combined = BordaCombine(ballot, Model::kTextAndLocation);
  for (const auto& e : combined.entries) {
    if (e.candidate_id == 19) EXPECT_EQ(e.score, 0.0);
  }
  EXPECT_EQ(combined.size(), 20u);
}

TEST(BordaCombine, Errors) {
  const std::unordered_map<PatchId, Timestamp> times = {{kA, 1}, {kB, 2}};
  try {
    BordaCombine(MakeFullBallot({List({kA}, 1), List({kB}, 2)}, times),
                 Model::kLocationCombined);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedQuery);
  }
  EXPECT_THROW(BordaCombine(BordaBallot{}, Model::kLocationCombined), Error);
  EXPECT_THROW(BordaCombine(MakeFullBallot({List({kA, kC})}, times), Model::kLocationCombined),
               Error);
}

struct RandomBallot {
  std::vector<oracle::Vote> votes;
  std::map<std::int64_t, std::int64_t> created;
  BordaBallot ballot;
  bool truncated = false;
};

// Up to 4 voters over up to 15 candidates; some voters see only a prefix.
RandomBallot MakeRandomBallot(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> voters(1, 4);
  std::uniform_int_distribution<int> candidates(1, 15);
  RandomBallot out;
  const int n = candidates(rng);
  std::vector<PatchId> ids;
  for (int i = 0; i < n; ++i) {
    ids.push_back(1000 + i);
    out.created[1000 + i] = static_cast<std::int64_t>(rng() % 4);
  }
  const int v = voters(rng);
  for (int i = 0; i < v; ++i) {
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<PatchId> order = ids;
    if (rng() % 3 == 0) {
      order.resize(1 + rng() % order.size());
      out.truncated = out.truncated || order.size() < ids.size();
    }
    out.votes.push_back({order, n});
    out.ballot.lists.push_back(List(order));
    out.ballot.list_sizes.push_back(static_cast<std::size_t>(n));
  }
  for (const auto& [id, t] : out.created) out.ballot.tie_times[id] = t;
  return out;
}

TEST(BordaProperty, MatchesBruteForceAndIsPermutation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const RandomBallot instance = MakeRandomBallot(rng);
    const CandidateList combined = BordaCombine(instance.ballot, Model::kLocationCombined);
    const auto expected = oracle::BruteBorda(instance.votes, instance.created);
    ASSERT_EQ(combined.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(combined.entries[i].candidate_id, expected[i].id);
      EXPECT_EQ(combined.entries[i].score, expected[i].score);
      EXPECT_EQ(combined.entries[i].rank, static_cast<int>(i + 1));
    }
    EXPECT_EQ(BordaCombine(instance.ballot, Model::kLocationCombined), combined);
  }
}

TEST(BordaProperty, UnanimityOnFullBallots) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    RandomBallot instance = MakeRandomBallot(rng);
    if (instance.truncated) continue;
    const CandidateList combined = BordaCombine(instance.ballot, Model::kLocationCombined);
    for (const auto& x : combined.entries) {
      for (const auto& y : combined.entries) {
        bool unanimous = true;
        for (const auto& list : instance.ballot.lists) {
          unanimous = unanimous && list.RankOf(x.candidate_id) < list.RankOf(y.candidate_id);
        }
        if (unanimous) EXPECT_LT(x.rank, y.rank);
      }
    }
  }
}

TEST(BordaProperty, ImprovingRankNeverLowersScore) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    RandomBallot instance = MakeRandomBallot(rng);
    auto& list = instance.ballot.lists[0];
    if (list.size() < 2) continue;
    const std::size_t pos = 1 + rng() % (list.size() - 1);
    const PatchId moved = list.entries[pos].candidate_id;
    const auto score_of = [&](const CandidateList& combined) {
      for (const auto& e : combined.entries) {
        if (e.candidate_id == moved) return e.score;
      }
      return -1.0;
    };
    const double before = score_of(BordaCombine(instance.ballot, Model::kLocationCombined));
    std::swap(list.entries[pos].candidate_id, list.entries[pos - 1].candidate_id);
    const double after = score_of(BordaCombine(instance.ballot, Model::kLocationCombined));
    EXPECT_GE(after, before);
  }
}

}  // namespace
}  // namespace patchlink
