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

#ifndef PATCHLINK_LINK_RECOVERY_H_
#define PATCHLINK_LINK_RECOVERY_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patchlink/patch.h"

namespace patchlink {

enum class MentionKind { kHyperlink, kReviewNumber, kChangeKey };

inline constexpr std::size_t kMentionKindCount = 3;

std::string_view MentionKindName(MentionKind kind);

// Phrases that must precede a bare review number (within
// kReviewCueWindow characters, case-insensitive) for it to count.
inline constexpr std::array<std::string_view, 6> kReviewNumberCues = {
    "replaced by", "duplicate of", "similar patch",
    "depends on",  "see",          "superseded by"};
inline constexpr std::size_t kReviewCueWindow = 40;

struct LinkMention {
  MentionKind kind = MentionKind::kReviewNumber;
  // The matched text: the URL, the number or the key.
  std::string raw;
  // Review number (hyperlink, review_number) or change key (change_key).
  std::string reference;
  // Byte offset of `raw` in the scanned text.
  std::size_t offset = 0;
  std::optional<PatchId> resolved_id;
  Timestamp comment_time = 0;
  std::string comment_author;
  int revision_no = 1;
};

// Scans free text for review links. Mentions come back in left-to-right order
// with comment metadata unset.
std::vector<LinkMention> ExtractLinkMentions(std::string_view text);

// All mentions in a patch's review discussion, carrying comment metadata.
std::vector<LinkMention> ExtractPatchMentions(const Patch& patch);

// A directed link from the patch whose discussion mentions the target.
struct LinkageRecord {
  PatchId source_id = 0;
  PatchId target_id = 0;
  LinkMention first_mention;
};

struct ResolveResult {
  std::vector<LinkageRecord> records;
  std::size_t unresolved = 0;
  std::size_t self_references = 0;
};

// Resolves mentions by review number or change key. Unknown targets and
// self-references are dropped and tallied; for each target only the earliest
// mention (by comment time, then input order) is kept.
ResolveResult ResolveMentions(std::span<const LinkMention> mentions,
                              const PatchStore& store, PatchId source_id);

struct FilterTally {
  std::size_t same_author = 0;
  std::size_t cherry_pick_or_revert = 0;
  std::size_t incomplete_author = 0;
  std::size_t duplicate = 0;

  std::size_t total() const {
    return same_author + cherry_pick_or_revert + incomplete_author + duplicate;
  }
};

struct FilterResult {
  std::vector<LinkageRecord> records;
  FilterTally tally;
};

// Removes links the source author was already aware of (same author,
// cherry-picks, reverts), links with an unknown author on either side, and
// repeated (source, target) pairs, keeping the earliest mention.
FilterResult FilterLinkages(std::span<const LinkageRecord> records,
                            const PatchStore& store);

struct RecoveryResult {
  std::vector<LinkageRecord> records;
  // Retained links by the kind of their first mention.
  std::array<std::size_t, kMentionKindCount> kind_counts{};
  std::size_t mentions = 0;
  std::size_t unresolved = 0;
  std::size_t self_references = 0;
  FilterTally filtered;
};

// Runs extraction, resolution and filtering over every patch in the store.
// Records are ordered by (source_id, target_id).
RecoveryResult RecoverLinkages(const PatchStore& store);

// CSV with header source_id,target_id,kind,first_mention_time,revision_no.
void WriteLinkagesCsv(std::span<const LinkageRecord> records, std::ostream& out);

}  // namespace patchlink

#endif  // PATCHLINK_LINK_RECOVERY_H_
