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

#ifndef PATCHLINK_PATCH_IO_H_
#define PATCHLINK_PATCH_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "patchlink/patch.h"

namespace patchlink {

// Reads JSON-lines patch records. Blank lines are skipped. Parse failures
// raise Error(kParse) with the 1-based line number in the message.
PatchStore LoadPatches(std::istream& in);
PatchStore LoadPatchesFile(const std::string& path);

// One canonical JSON object per patch, ordered by id. LoadPatches followed by
// WritePatches reproduces canonical input byte for byte.
std::string PatchToJsonLine(const Patch& patch);
void WritePatches(const PatchStore& store, std::ostream& out);

// CSV with header source_id,target_id,linkage_type,notify_time,notify_revision.
std::vector<GroundTruthEntry> LoadGroundTruth(std::istream& in);
std::vector<GroundTruthEntry> LoadGroundTruthFile(const std::string& path);
void WriteGroundTruth(std::span<const GroundTruthEntry> entries,
                      std::ostream& out);

}  // namespace patchlink

#endif  // PATCHLINK_PATCH_IO_H_
