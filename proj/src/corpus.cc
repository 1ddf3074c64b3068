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
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "patchlink/error.h"
#include "patchlink/patch.h"
#include "patchlink/patch_io.h"

namespace patchlink {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kDuplicateId: return "duplicate id";
    case ErrorCode::kValidation: return "validation error";
    case ErrorCode::kUnknownPatch: return "unknown patch";
    case ErrorCode::kCapacity: return "capacity error";
    case ErrorCode::kEmptyCorpus: return "empty corpus";
    case ErrorCode::kUndefinedSimilarity: return "undefined similarity";
    case ErrorCode::kMixedQuery: return "mixed query";
    case ErrorCode::kRange: return "range error";
    case ErrorCode::kUndefinedMetric: return "undefined metric";
    case ErrorCode::kIo: return "I/O error";
    case ErrorCode::kInternal: return "internal error";
  }
  return "error";
}

std::string_view DecisionStatusName(DecisionStatus status) {
  switch (status) {
    case DecisionStatus::kMerged: return "merged";
    case DecisionStatus::kAbandoned: return "abandoned";
    case DecisionStatus::kOpen: return "open";
  }
  return "open";
}

DecisionStatus ParseDecisionStatus(std::string_view name) {
  if (name == "merged") return DecisionStatus::kMerged;
  if (name == "abandoned") return DecisionStatus::kAbandoned;
  if (name == "open") return DecisionStatus::kOpen;
  throw Error(ErrorCode::kValidation,
              "unknown decision status '" + std::string(name) + "'");
}

std::string_view LinkageTypeName(LinkageType type) {
  switch (type) {
    case LinkageType::kAlternativeSolution: return "AlternativeSolution";
    case LinkageType::kBroaderContext: return "BroaderContext";
    case LinkageType::kDependency: return "Dependency";
    case LinkageType::kOther: return "Other";
  }
  return "Other";
}

LinkageType ParseLinkageType(std::string_view name) {
  std::string folded;
  for (char c : name) {
    if (c == ' ' || c == '_' || c == '-') continue;
    folded.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (folded == "alternativesolution") return LinkageType::kAlternativeSolution;
  if (folded == "broadercontext") return LinkageType::kBroaderContext;
  if (folded == "dependency") return LinkageType::kDependency;
  if (folded == "other" || folded == "others") return LinkageType::kOther;
  throw Error(ErrorCode::kValidation,
              "unknown linkage type '" + std::string(name) + "'");
}

std::string Patch::TextualContent() const {
  if (description.empty()) return title;
  if (title.empty()) return description;
  return title + "\n" + description;
}

namespace {

std::string PatchLabel(const Patch& patch) {
  return "patch " + std::to_string(patch.id);
}

// Change keys are hex; compare them case-insensitively apart from the
// leading "I" of Change-Id style keys.
std::string NormalizeChangeKey(std::string_view key) {
  std::string out(key);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (out.size() == 41 && out[0] == 'i') out[0] = 'I';
  return out;
}

}  // namespace

void ValidatePatch(const Patch& patch) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kValidation, PatchLabel(patch) + ": " + what);
  };
  if (patch.id <= 0) fail("id must be a positive integer");
  if (patch.change_key && patch.change_key->empty()) {
    fail("change_key must not be empty when present");
  }
  if (patch.revisions.empty()) fail("revisions must not be empty");
  if (!std::is_sorted(patch.revisions.begin(), patch.revisions.end())) {
    fail("revisions must be sorted ascending");
  }
  if (patch.revisions.front() != patch.created_at) {
    fail("revisions[0] must equal created_at");
  }
  if (patch.decision.decided() != patch.decision.time.has_value()) {
    fail("decision time must be present iff the patch is decided");
  }
  if (patch.decision.time && *patch.decision.time < patch.created_at) {
    fail("decision time precedes created_at");
  }
  std::set<std::string_view> seen;
  for (const auto& path : patch.file_paths) {
    if (path.empty()) fail("empty file path");
    if (!seen.insert(path).second) fail("duplicate file path '" + path + "'");
  }
  const int revision_count = static_cast<int>(patch.revisions.size());
  for (const auto& comment : patch.comments) {
    if (comment.posted_at < patch.created_at) {
      fail("comment posted before created_at");
    }
    if (comment.revision_no < 1 || comment.revision_no > revision_count) {
      fail("comment revision_no out of range");
    }
  }
}

PatchStore::PatchStore(std::vector<Patch> patches) : patches_(std::move(patches)) {
  std::sort(patches_.begin(), patches_.end(), [](const Patch& a, const Patch& b) {
    if (a.created_at != b.created_at) return a.created_at < b.created_at;
    return a.id < b.id;
  });
  by_id_.reserve(patches_.size());
  for (std::size_t i = 0; i < patches_.size(); ++i) {
    const Patch& patch = patches_[i];
    ValidatePatch(patch);
    if (!by_id_.emplace(patch.id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate patch id " + std::to_string(patch.id));
    }
    if (patch.change_key) {
      const auto [it, inserted] =
          by_change_key_.emplace(NormalizeChangeKey(*patch.change_key), patch.id);
      if (!inserted) {
        throw Error(ErrorCode::kValidation,
                    "change_key " + *patch.change_key + " shared by patches " +
                        std::to_string(it->second) + " and " +
                        std::to_string(patch.id));
      }
    }
  }
}

const Patch* PatchStore::Find(PatchId id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &patches_[it->second];
}

const Patch& PatchStore::At(PatchId id) const {
  const Patch* patch = Find(id);
  if (patch == nullptr) {
    throw Error(ErrorCode::kUnknownPatch, "unknown patch " + std::to_string(id));
  }
  return *patch;
}

const Patch* PatchStore::FindByChangeKey(std::string_view change_key) const {
  const auto it = by_change_key_.find(NormalizeChangeKey(change_key));
  return it == by_change_key_.end() ? nullptr : Find(it->second);
}

void ValidateGroundTruth(const PatchStore& store,
                         std::span<const GroundTruthEntry> entries) {
  for (const auto& entry : entries) {
    const Patch& source = store.At(entry.source_id);
    const Patch& target = store.At(entry.target_id);
    const std::string label = "ground truth " + std::to_string(entry.source_id) +
                              " -> " + std::to_string(entry.target_id);
    if (source.created_at <= target.created_at) {
      throw Error(ErrorCode::kValidation,
                  label + ": source must be created after target");
    }
    if (entry.notify_time < source.created_at) {
      throw Error(ErrorCode::kValidation,
                  label + ": notify_time precedes source creation");
    }
    if (entry.notify_revision < 1 ||
        entry.notify_revision > static_cast<int>(source.revisions.size())) {
      throw Error(ErrorCode::kValidation, label + ": notify_revision out of range");
    }
  }
}

// ---------------------------------------------------------------------------
// JSON-lines patches

namespace {

template <typename T>
T Field(const Json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw Error(ErrorCode::kParse, std::string("missing key '") + key + "'");
  }
  return it->get<T>();
}

template <typename T>
T FieldOr(const Json& object, const char* key, T fallback) {
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return fallback;
  return it->get<T>();
}

Timestamp TimeField(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string(what) + " must be an integer timestamp");
  }
  return value.get<Timestamp>();
}

Patch PatchFromJson(const Json& object) {
  if (!object.is_object()) throw Error(ErrorCode::kParse, "record is not an object");
  Patch patch;
  const auto id = object.find("id");
  if (id == object.end() || !id->is_number_integer()) {
    throw Error(ErrorCode::kParse, "missing or non-integer 'id'");
  }
  patch.id = id->get<PatchId>();
  if (const auto key = object.find("change_key"); key != object.end() && !key->is_null()) {
    patch.change_key = key->get<std::string>();
  }
  patch.project = FieldOr<std::string>(object, "project", "");
  patch.author = FieldOr<std::string>(object, "author", "");
  const auto created = object.find("created_at");
  if (created == object.end()) throw Error(ErrorCode::kParse, "missing key 'created_at'");
  patch.created_at = TimeField(*created, "created_at");
  patch.title = FieldOr<std::string>(object, "title", "");
  patch.description = FieldOr<std::string>(object, "description", "");
  patch.file_paths =
      FieldOr<std::vector<std::string>>(object, "file_paths", {});
  for (const auto& revision : Field<Json>(object, "revisions")) {
    patch.revisions.push_back(TimeField(revision, "revision"));
  }
  if (const auto decision = object.find("decision");
      decision != object.end() && !decision->is_null()) {
    patch.decision.status =
        ParseDecisionStatus(Field<std::string>(*decision, "status"));
    if (const auto time = decision->find("time"); time != decision->end() && !time->is_null()) {
      patch.decision.time = TimeField(*time, "decision time");
    }
  }
  if (const auto comments = object.find("comments");
      comments != object.end() && !comments->is_null()) {
    for (const auto& item : *comments) {
      Comment comment;
      comment.author = FieldOr<std::string>(item, "author", "");
      comment.posted_at = TimeField(Field<Json>(item, "time"), "comment time");
      comment.text = FieldOr<std::string>(item, "text", "");
      comment.revision_no = Field<int>(item, "revision_no");
      patch.comments.push_back(std::move(comment));
    }
  }
  return patch;
}

}  // namespace

PatchStore LoadPatches(std::istream& in) {
  std::vector<Patch> patches;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Patch patch = PatchFromJson(Json::parse(line));
      ValidatePatch(patch);
      patches.push_back(std::move(patch));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kParse && e.code() != ErrorCode::kValidation) throw;
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return PatchStore(std::move(patches));
}

PatchStore LoadPatchesFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return LoadPatches(in);
}

std::string PatchToJsonLine(const Patch& patch) {
  OrderedJson out;
  out["id"] = patch.id;
  out["change_key"] = patch.change_key ? OrderedJson(*patch.change_key) : OrderedJson();
  out["project"] = patch.project;
  out["author"] = patch.author;
  out["created_at"] = patch.created_at;
  out["title"] = patch.title;
  out["description"] = patch.description;
  out["file_paths"] = patch.file_paths;
  out["revisions"] = patch.revisions;
  OrderedJson decision;
  decision["status"] = DecisionStatusName(patch.decision.status);
  decision["time"] = patch.decision.time ? OrderedJson(*patch.decision.time) : OrderedJson();
  out["decision"] = std::move(decision);
  OrderedJson comments = OrderedJson::array();
  for (const auto& comment : patch.comments) {
    OrderedJson item;
    item["author"] = comment.author;
    item["time"] = comment.posted_at;
    item["text"] = comment.text;
    item["revision_no"] = comment.revision_no;
    comments.push_back(std::move(item));
  }
  out["comments"] = std::move(comments);
  return out.dump();
}

void WritePatches(const PatchStore& store, std::ostream& out) {
  std::vector<const Patch*> ordered;
  ordered.reserve(store.size());
  for (const auto& patch : store.ByTime()) ordered.push_back(&patch);
  std::sort(ordered.begin(), ordered.end(),
            [](const Patch* a, const Patch* b) { return a->id < b->id; });
  for (const Patch* patch : ordered) out << PatchToJsonLine(*patch) << '\n';
}

// ---------------------------------------------------------------------------
// Ground-truth CSV

namespace {

constexpr std::string_view kGroundTruthHeader =
    "source_id,target_id,linkage_type,notify_time,notify_revision";

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T ParseInteger(std::string_view text, std::size_t line_no) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": expected integer, got '" +
                                       std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<GroundTruthEntry> LoadGroundTruth(std::istream& in) {
  std::vector<GroundTruthEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kGroundTruthHeader) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                           ": expected header '" +
                                           std::string(kGroundTruthHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = SplitCsv(line);
    if (fields.size() != 5) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected 5 fields");
    }
    GroundTruthEntry entry;
    entry.source_id = ParseInteger<PatchId>(fields[0], line_no);
    entry.target_id = ParseInteger<PatchId>(fields[1], line_no);
    try {
      entry.linkage_type = ParseLinkageType(fields[2]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    entry.notify_time = ParseInteger<Timestamp>(fields[3], line_no);
    entry.notify_revision = ParseInteger<int>(fields[4], line_no);
    entries.push_back(entry);
  }
  return entries;
}

std::vector<GroundTruthEntry> LoadGroundTruthFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return LoadGroundTruth(in);
}

void WriteGroundTruth(std::span<const GroundTruthEntry> entries,
                      std::ostream& out) {
  out << kGroundTruthHeader << '\n';
  for (const auto& entry : entries) {
    out << entry.source_id << ',' << entry.target_id << ','
        << LinkageTypeName(entry.linkage_type) << ',' << entry.notify_time
        << ',' << entry.notify_revision << '\n';
  }
}

}  // namespace patchlink
