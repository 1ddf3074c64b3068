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

#ifndef PATCHLINK_PATCH_H_
#define PATCHLINK_PATCH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace patchlink {

using PatchId = std::int64_t;
// UTC epoch seconds.
using Timestamp = std::int64_t;

inline constexpr double kSecondsPerDay = 86400.0;

enum class DecisionStatus { kMerged, kAbandoned, kOpen };

std::string_view DecisionStatusName(DecisionStatus status);
DecisionStatus ParseDecisionStatus(std::string_view name);

struct Decision {
  DecisionStatus status = DecisionStatus::kOpen;
  // Absent iff status is kOpen.
  std::optional<Timestamp> time;

  bool decided() const { return status != DecisionStatus::kOpen; }
  bool operator==(const Decision&) const = default;
};

struct Comment {
  std::string author;
  Timestamp posted_at = 0;
  std::string text;
  // 1-based index into the owning patch's revisions.
  int revision_no = 1;

  bool operator==(const Comment&) const = default;
};

struct Patch {
  PatchId id = 0;
  std::optional<std::string> change_key;
  std::string project;
  std::string author;
  Timestamp created_at = 0;
  std::string title;
  std::string description;
  std::vector<std::string> file_paths;
  std::vector<Timestamp> revisions;
  Decision decision;
  std::vector<Comment> comments;

  // Title and description joined by a newline; the input of the textual model.
  std::string TextualContent() const;

  bool operator==(const Patch&) const = default;
};

// Throws Error(kValidation) naming the first violated invariant.
void ValidatePatch(const Patch& patch);

enum class LinkageType { kAlternativeSolution, kBroaderContext, kDependency, kOther };

inline constexpr LinkageType kAllLinkageTypes[] = {
    LinkageType::kAlternativeSolution, LinkageType::kBroaderContext,
    LinkageType::kDependency, LinkageType::kOther};

std::string_view LinkageTypeName(LinkageType type);
LinkageType ParseLinkageType(std::string_view name);

// A labelled linkage used as retrieval ground truth. The source is the later
// patch (the query); the target is the earlier patch it links to.
struct GroundTruthEntry {
  PatchId source_id = 0;
  PatchId target_id = 0;
  LinkageType linkage_type = LinkageType::kOther;
  Timestamp notify_time = 0;
  int notify_revision = 1;

  bool operator==(const GroundTruthEntry&) const = default;
};

// Immutable, validated collection of patches with id, change-key and
// creation-time lookups.
class PatchStore {
 public:
  PatchStore() = default;
  // Validates every patch; throws kDuplicateId or kValidation.
  explicit PatchStore(std::vector<Patch> patches);

  std::size_t size() const { return patches_.size(); }
  bool empty() const { return patches_.empty(); }

  const Patch* Find(PatchId id) const;
  // Throws Error(kUnknownPatch).
  const Patch& At(PatchId id) const;
  const Patch* FindByChangeKey(std::string_view change_key) const;
  bool Contains(PatchId id) const { return Find(id) != nullptr; }

  // Patches ordered by (created_at, id) ascending.
  std::span<const Patch> ByTime() const { return patches_; }

 private:
  std::vector<Patch> patches_;
  std::unordered_map<PatchId, std::size_t> by_id_;
  std::unordered_map<std::string, PatchId> by_change_key_;
};

// Checks the ground-truth invariants against a store: both endpoints known,
// source created strictly after target, notification not before the source
// was created and attached to an existing revision. Throws kValidation or
// kUnknownPatch.
void ValidateGroundTruth(const PatchStore& store,
                         std::span<const GroundTruthEntry> entries);

}  // namespace patchlink

#endif  // PATCHLINK_PATCH_H_
