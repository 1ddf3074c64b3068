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

#ifndef PATCHLINK_ERROR_H_
#define PATCHLINK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace patchlink {

enum class ErrorCode {
  kParse,
  kDuplicateId,
  kValidation,
  kUnknownPatch,
  kCapacity,
  kEmptyCorpus,
  kUndefinedSimilarity,
  kMixedQuery,
  kRange,
  kUndefinedMetric,
  kIo,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (mainly the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace patchlink

#endif  // PATCHLINK_ERROR_H_
