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

#include <sstream>

#include <gtest/gtest.h>

#include "patchlink/link_recovery.h"
#include "test_support.h"

namespace patchlink {
namespace {

using testing::kDay;
using testing::MakePatch;

TEST(ExtractLinkMentions, GerritHyperlink) {
  const auto mentions =
      ExtractLinkMentions("similar patch https://review.openstack.org/#/c/84977/");
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].kind, MentionKind::kHyperlink);
  EXPECT_EQ(mentions[0].reference, "84977");
}

TEST(ExtractLinkMentions, ProjectScopedHyperlink) {
  const auto mentions = ExtractLinkMentions(
      "see https://codereview.qt-project.org/c/qt/qtbase/+/301234 and "
      "http://gerrit.example.com/c/5566");
  ASSERT_EQ(mentions.size(), 2u);
  EXPECT_EQ(mentions[0].reference, "301234");
  EXPECT_EQ(mentions[1].reference, "5566");
  EXPECT_LT(mentions[0].offset, mentions[1].offset);
}

TEST(ExtractLinkMentions, CuedReviewNumbers) {
  const auto mentions = ExtractLinkMentions("Replaced by 22724, 22725");
  ASSERT_EQ(mentions.size(), 2u);
  EXPECT_EQ(mentions[0].kind, MentionKind::kReviewNumber);
  EXPECT_EQ(mentions[0].reference, "22724");
  EXPECT_EQ(mentions[1].reference, "22725");
}

TEST(ExtractLinkMentions, CueMatchIsCaseInsensitive) {
  EXPECT_EQ(ExtractLinkMentions("DUPLICATE OF 1234").size(), 1u);
  EXPECT_EQ(ExtractLinkMentions("Depends on 1234").size(), 1u);
}

TEST(ExtractLinkMentions, BareNumbersIgnored) {
  EXPECT_TRUE(ExtractLinkMentions("fixes bug 1234567 on line 42").empty());
  // cue must be a whole word: "seen" is not "see"
  EXPECT_TRUE(ExtractLinkMentions("never seen 1234 before").empty());
}

TEST(ExtractLinkMentions, CueOutsideWindowIgnored) {
  const std::string far = "see " + std::string(60, 'x') + " 4321";
  EXPECT_TRUE(ExtractLinkMentions(far).empty());
}

TEST(ExtractLinkMentions, ChangeKeys) {
  const auto plain = ExtractLinkMentions(
      "would conflict with 9afb02412eadc567e82a0aca10c6401937d213e9");
  ASSERT_EQ(plain.size(), 1u);
  EXPECT_EQ(plain[0].kind, MentionKind::kChangeKey);
  EXPECT_EQ(plain[0].reference, "9afb02412eadc567e82a0aca10c6401937d213e9");

  const auto prefixed =
      ExtractLinkMentions("Change-Id I9afb02412eadc567e82a0aca10c6401937d213e9");
  ASSERT_EQ(prefixed.size(), 1u);
  EXPECT_EQ(prefixed[0].reference, "I9afb02412eadc567e82a0aca10c6401937d213e9");

  // 39 and 41 hex digits are not keys
  EXPECT_TRUE(ExtractLinkMentions(std::string(39, 'a')).empty());
  EXPECT_TRUE(ExtractLinkMentions(std::string(41, 'a')).empty());
}

TEST(ExtractLinkMentions, NoLinkContent) {
  EXPECT_TRUE(ExtractLinkMentions("LGTM, thanks!").empty());
  EXPECT_TRUE(ExtractLinkMentions("").empty());
}

TEST(ExtractLinkMentions, Pure) {
  const std::string text =
      "see 1234, https://r.example/#/c/77/ and "
      "I9afb02412eadc567e82a0aca10c6401937d213e9";
  const auto a = ExtractLinkMentions(text);
  const auto b = ExtractLinkMentions(text);
  ASSERT_EQ(a.size(), 3u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].raw, b[i].raw);
    EXPECT_EQ(a[i].offset, b[i].offset);
    EXPECT_FALSE(a[i].raw.empty());
  }
}

Patch WithComments(Patch patch, std::vector<Comment> comments) {
  patch.comments = std::move(comments);
  return patch;
}

TEST(ResolveMentions, ResolvesKnownIdsOnly) {
  const PatchStore store({MakePatch(84977, 0), MakePatch(90000, kDay)});
  const auto mentions = ExtractLinkMentions(
      "similar patch https://review.openstack.org/#/c/84977/ and see 99999");
  const ResolveResult result = ResolveMentions(mentions, store, 90000);
  ASSERT_EQ(result.records.size(), 1u);
  EXPECT_EQ(result.records[0].source_id, 90000);
  EXPECT_EQ(result.records[0].target_id, 84977);
  EXPECT_EQ(result.unresolved, 1u);
}

TEST(ResolveMentions, SelfReferenceDropped) {
  const PatchStore store({MakePatch(5000, 0)});
  const ResolveResult result = ResolveMentions(ExtractLinkMentions("see 5000"), store, 5000);
  EXPECT_TRUE(result.records.empty());
  EXPECT_EQ(result.self_references, 1u);
}

TEST(ResolveMentions, ChangeKeyLookup) {
  Patch target = MakePatch(10, 0);
  target.change_key = "9afb02412eadc567e82a0aca10c6401937d213e9";
  const PatchStore store({target, MakePatch(11, kDay)});
  const auto result = ResolveMentions(
      ExtractLinkMentions("would conflict with 9AFB02412EADC567E82A0ACA10C6401937D213E9"),
      store, 11);
  ASSERT_EQ(result.records.size(), 1u);
  EXPECT_EQ(result.records[0].target_id, 10);
}

TEST(ResolveMentions, EarliestMentionWins) {
  Patch source = MakePatch(90000, kDay);
  source.revisions = {kDay, 2 * kDay};
  source = WithComments(source, {{"carol", 3 * kDay, "see 84977 again", 2},
                                 {"bob", 2 * kDay, "similar patch 84977", 1}});
  const PatchStore store({MakePatch(84977, 0), source});
  const auto result =
      ResolveMentions(ExtractPatchMentions(store.At(90000)), store, 90000);
  ASSERT_EQ(result.records.size(), 1u);
  EXPECT_EQ(result.records[0].first_mention.comment_time, 2 * kDay);
  EXPECT_EQ(result.records[0].first_mention.comment_author, "bob");
}

LinkageRecord Record(PatchId source, PatchId target, Timestamp time = 0) {
  LinkageRecord record;
  record.source_id = source;
  record.target_id = target;
  record.first_mention.raw = std::to_string(target);
  record.first_mention.comment_time = time;
  return record;
}

TEST(FilterLinkages, SameAuthorRemoved) {
  const PatchStore store({MakePatch(1, 0, {"a"}, "dana"), MakePatch(2, kDay, {"a"}, "dana")});
  const auto result = FilterLinkages(std::vector{Record(2, 1)}, store);
  EXPECT_TRUE(result.records.empty());
  EXPECT_EQ(result.tally.same_author, 1u);
}

TEST(FilterLinkages, CherryPickAndRevertRemoved) {
  Patch target = MakePatch(1, 0);
  target.change_key = "9afb02412eadc567e82a0aca10c6401937d213e9";
  Patch pick = MakePatch(2, kDay);
  pick.description =
      "Backport.\n\n(Cherry picked from commit 9afb02412eadc567e82a0aca10c6401937d213e9)";
  Patch revert = MakePatch(3, kDay);
  revert.title = "Revert \"Add thing\"";
  const PatchStore store({target, pick, revert});
  const auto result = FilterLinkages(std::vector{Record(2, 1), Record(3, 1)}, store);
  EXPECT_TRUE(result.records.empty());
  EXPECT_EQ(result.tally.cherry_pick_or_revert, 2u);
}

TEST(FilterLinkages, IncompleteAuthorRemoved) {
  Patch anonymous = MakePatch(2, kDay);
  anonymous.author.clear();
  const PatchStore store({MakePatch(1, 0), anonymous});
  const auto result = FilterLinkages(std::vector{Record(2, 1)}, store);
  EXPECT_TRUE(result.records.empty());
  EXPECT_EQ(result.tally.incomplete_author, 1u);
}

TEST(FilterLinkages, KeepsValidAndDedupes) {
  const PatchStore store({MakePatch(1, 0), MakePatch(2, kDay), MakePatch(3, 2 * kDay)});
  const auto result = FilterLinkages(
      std::vector{Record(2, 1, 50), Record(2, 1, 40), Record(3, 1, 60)}, store);
  ASSERT_EQ(result.records.size(), 2u);
  EXPECT_EQ(result.tally.duplicate, 1u);
  for (const auto& record : result.records) {
    if (record.source_id == 2) EXPECT_EQ(record.first_mention.comment_time, 40);
  }
}

TEST(FilterLinkagesProperty, SubsetAndIdempotent) {
  std::vector<Patch> patches;
  for (int i = 1; i <= 12; ++i) {
    patches.push_back(MakePatch(i, i * kDay, {"a"}, "author" + std::to_string(i % 3)));
  }
  patches[4].title = "Revert \"x\"";
  const PatchStore store(std::move(patches));
  std::vector<LinkageRecord> records;
  for (int s = 2; s <= 12; ++s) {
    for (int t = 1; t < s; t += 2) records.push_back(Record(s, t, s * 10 + t));
  }
  records.push_back(Record(12, 1, 5));
  const auto once = FilterLinkages(records, store);
  const auto twice = FilterLinkages(once.records, store);
  ASSERT_EQ(once.records.size(), twice.records.size());
  EXPECT_EQ(twice.tally.total(), 0u);
  for (std::size_t i = 0; i < once.records.size(); ++i) {
    EXPECT_EQ(once.records[i].source_id, twice.records[i].source_id);
    EXPECT_EQ(once.records[i].target_id, twice.records[i].target_id);
    EXPECT_NE(once.records[i].source_id, once.records[i].target_id);
    const bool from_input = std::any_of(records.begin(), records.end(), [&](const auto& r) {
      return r.source_id == once.records[i].source_id &&
             r.target_id == once.records[i].target_id;
    });
    EXPECT_TRUE(from_input);
  }
}

TEST(RecoverLinkages, MotivatingComment) {
  Patch target = MakePatch(84977, 0, {"nova/api.py"}, "alice");
  Patch source = MakePatch(85500, kDay, {"nova/api.py"}, "erin");
  source = WithComments(
      source, {{"frank", 4 * kDay, "similar patch https://review.openstack.org/#/c/84977/", 1}});
  const PatchStore store({target, source});
  const RecoveryResult result = RecoverLinkages(store);
  ASSERT_EQ(result.records.size(), 1u);
  EXPECT_EQ(result.records[0].source_id, 85500);
  EXPECT_EQ(result.records[0].target_id, 84977);
  EXPECT_EQ(result.kind_counts[static_cast<std::size_t>(MentionKind::kHyperlink)], 1u);

  std::ostringstream csv;
  WriteLinkagesCsv(result.records, csv);
  EXPECT_EQ(csv.str(),
            "source_id,target_id,kind,first_mention_time,revision_no\n"
            "85500,84977,hyperlink,345600,1\n");
}

TEST(RecoverLinkages, NeverSelfLinks) {
  Patch patch = MakePatch(700, 0);
  patch = WithComments(patch, {{"x", 10, "see 700, https://r/#/c/700/", 1}});
  const RecoveryResult result = RecoverLinkages(PatchStore({patch}));
  EXPECT_TRUE(result.records.empty());
  EXPECT_EQ(result.self_references, 2u);
}

}  // namespace
}  // namespace patchlink
