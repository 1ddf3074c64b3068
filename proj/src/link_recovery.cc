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

#include "patchlink/link_recovery.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <ostream>
#include <regex>
#include <tuple>
#include <utility>

namespace patchlink {

std::string_view MentionKindName(MentionKind kind) {
  switch (kind) {
    case MentionKind::kHyperlink: return "hyperlink";
    case MentionKind::kReviewNumber: return "review_number";
    case MentionKind::kChangeKey: return "change_key";
  }
  return "review_number";
}

namespace {

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::regex& UrlPattern() {
  static const std::regex pattern(R"(https?://[^\s<>"'\]\)]+)", std::regex::icase);
  return pattern;
}

// "/c/123", "#/c/123" and the newer "/c/<project>/+/123" layout.
const std::regex& ReviewPathPattern() {
  static const std::regex pattern(R"(/c/(?:(\d+)|[^\s#?]*?/\+/(\d+))(?![0-9]))");
  return pattern;
}

const std::regex& ChangeKeyPattern() {
  static const std::regex pattern(R"(\bI?[0-9a-fA-F]{40}\b)");
  return pattern;
}

const std::regex& NumberPattern() {
  static const std::regex pattern(R"(\b[0-9]+\b)");
  return pattern;
}

const std::regex& CuePattern() {
  static const std::regex pattern = [] {
    std::string alternatives;
    for (std::string_view cue : kReviewNumberCues) {
      if (!alternatives.empty()) alternatives += '|';
      alternatives += cue;
    }
    return std::regex("(^|[^a-z])(" + alternatives + ")([^a-z]|$)");
  }();
  return pattern;
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

bool Overlaps(const std::vector<Span>& spans, std::size_t begin, std::size_t end) {
  return std::any_of(spans.begin(), spans.end(), [&](const Span& s) {
    return begin < s.end && s.begin < end;
  });
}

std::string TrimTrailingPunctuation(std::string url) {
  while (!url.empty() && std::string_view(".,;:!?").find(url.back()) != std::string_view::npos) {
    url.pop_back();
  }
  return url;
}

bool HasCueBefore(std::string_view text, std::size_t offset) {
  const std::size_t begin = offset > kReviewCueWindow ? offset - kReviewCueWindow : 0;
  const std::string window = Lowercase(text.substr(begin, offset - begin));
  return std::regex_search(window, CuePattern());
}

}  // namespace

std::vector<LinkMention> ExtractLinkMentions(std::string_view text) {
  std::vector<LinkMention> mentions;
  std::vector<Span> consumed;
  const std::string owned(text);

  for (auto it = std::sregex_iterator(owned.begin(), owned.end(), UrlPattern());
       it != std::sregex_iterator(); ++it) {
    const auto begin = static_cast<std::size_t>(it->position());
    const std::string url = TrimTrailingPunctuation(it->str());
    consumed.push_back({begin, begin + it->length()});
    std::smatch path;
    if (!std::regex_search(url, path, ReviewPathPattern())) continue;
    LinkMention mention;
    mention.kind = MentionKind::kHyperlink;
    mention.raw = url;
    mention.reference = path[1].matched ? path[1].str() : path[2].str();
    mention.offset = begin;
    mentions.push_back(std::move(mention));
  }

  for (auto it = std::sregex_iterator(owned.begin(), owned.end(), ChangeKeyPattern());
       it != std::sregex_iterator(); ++it) {
    const auto begin = static_cast<std::size_t>(it->position());
    const auto end = begin + static_cast<std::size_t>(it->length());
    if (Overlaps(consumed, begin, end)) continue;
    consumed.push_back({begin, end});
    LinkMention mention;
    mention.kind = MentionKind::kChangeKey;
    mention.raw = it->str();
    mention.reference = it->str();
    mention.offset = begin;
    mentions.push_back(std::move(mention));
  }

  for (auto it = std::sregex_iterator(owned.begin(), owned.end(), NumberPattern());
       it != std::sregex_iterator(); ++it) {
    const auto begin = static_cast<std::size_t>(it->position());
    const auto end = begin + static_cast<std::size_t>(it->length());
    if (Overlaps(consumed, begin, end)) continue;
    if (!HasCueBefore(text, begin)) continue;
    LinkMention mention;
    mention.kind = MentionKind::kReviewNumber;
    mention.raw = it->str();
    mention.reference = it->str();
    mention.offset = begin;
    mentions.push_back(std::move(mention));
  }

  std::stable_sort(mentions.begin(), mentions.end(),
                   [](const LinkMention& a, const LinkMention& b) {
                     return a.offset < b.offset;
                   });
  return mentions;
}

std::vector<LinkMention> ExtractPatchMentions(const Patch& patch) {
  std::vector<LinkMention> all;
  for (const auto& comment : patch.comments) {
    for (auto& mention : ExtractLinkMentions(comment.text)) {
      mention.comment_time = comment.posted_at;
      mention.comment_author = comment.author;
      mention.revision_no = comment.revision_no;
      all.push_back(std::move(mention));
    }
  }
  return all;
}

ResolveResult ResolveMentions(std::span<const LinkMention> mentions,
                              const PatchStore& store, PatchId source_id) {
  store.At(source_id);
  ResolveResult result;
  // target -> index into result.records
  std::map<PatchId, std::size_t> by_target;
  for (const auto& mention : mentions) {
    const Patch* target = nullptr;
    if (mention.kind == MentionKind::kChangeKey) {
      target = store.FindByChangeKey(mention.reference);
    } else {
      PatchId id = 0;
      const auto& ref = mention.reference;
      const auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), id);
      if (ec == std::errc() && ptr == ref.data() + ref.size()) target = store.Find(id);
    }
    if (target == nullptr) {
      ++result.unresolved;
      continue;
    }
    if (target->id == source_id) {
      ++result.self_references;
      continue;
    }
    LinkMention resolved = mention;
    resolved.resolved_id = target->id;
    const auto [it, inserted] = by_target.emplace(target->id, result.records.size());
    if (inserted) {
      result.records.push_back({source_id, target->id, std::move(resolved)});
    } else if (resolved.comment_time < result.records[it->second].first_mention.comment_time) {
      result.records[it->second].first_mention = std::move(resolved);
    }
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const LinkageRecord& a, const LinkageRecord& b) {
                     return a.first_mention.comment_time < b.first_mention.comment_time;
                   });
  return result;
}

namespace {

bool IsCherryPickOrRevert(const Patch& source) {
  return Lowercase(source.description).find("cherry picked from commit") !=
             std::string::npos ||
         source.title.starts_with("Revert \"");
}

}  // namespace

FilterResult FilterLinkages(std::span<const LinkageRecord> records,
                            const PatchStore& store) {
  FilterResult result;
  // Earliest record per directed pair.
  std::map<std::pair<PatchId, PatchId>, std::size_t> earliest;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto key = std::make_pair(records[i].source_id, records[i].target_id);
    const auto [it, inserted] = earliest.emplace(key, i);
    if (!inserted && records[i].first_mention.comment_time <
                         records[it->second].first_mention.comment_time) {
      it->second = i;
    }
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const LinkageRecord& record = records[i];
    if (earliest.at({record.source_id, record.target_id}) != i) {
      ++result.tally.duplicate;
      continue;
    }
    const Patch& source = store.At(record.source_id);
    const Patch& target = store.At(record.target_id);
    if (source.author.empty() || target.author.empty()) {
      ++result.tally.incomplete_author;
    } else if (source.author == target.author) {
      ++result.tally.same_author;
    } else if (IsCherryPickOrRevert(source)) {
      ++result.tally.cherry_pick_or_revert;
    } else {
      result.records.push_back(record);
    }
  }
  return result;
}

RecoveryResult RecoverLinkages(const PatchStore& store) {
  RecoveryResult result;
  std::vector<LinkageRecord> resolved;
  for (const auto& patch : store.ByTime()) {
    const auto mentions = ExtractPatchMentions(patch);
    result.mentions += mentions.size();
    auto batch = ResolveMentions(mentions, store, patch.id);
    result.unresolved += batch.unresolved;
    result.self_references += batch.self_references;
    for (auto& record : batch.records) resolved.push_back(std::move(record));
  }
  auto filtered = FilterLinkages(resolved, store);
  result.filtered = filtered.tally;
  result.records = std::move(filtered.records);
  std::sort(result.records.begin(), result.records.end(),
            [](const LinkageRecord& a, const LinkageRecord& b) {
              return std::tie(a.source_id, a.target_id) <
                     std::tie(b.source_id, b.target_id);
            });
  for (const auto& record : result.records) {
    ++result.kind_counts[static_cast<std::size_t>(record.first_mention.kind)];
  }
  return result;
}

void WriteLinkagesCsv(std::span<const LinkageRecord> records, std::ostream& out) {
  out << "source_id,target_id,kind,first_mention_time,revision_no\n";
  for (const auto& record : records) {
    out << record.source_id << ',' << record.target_id << ','
        << MentionKindName(record.first_mention.kind) << ','
        << record.first_mention.comment_time << ','
        << record.first_mention.revision_no << '\n';
  }
}

}  // namespace patchlink
