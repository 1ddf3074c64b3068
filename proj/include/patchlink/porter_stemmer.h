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

#ifndef PATCHLINK_PORTER_STEMMER_H_
#define PATCHLINK_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace patchlink {

// The original Porter (1980) suffix-stripping algorithm. Expects a lowercase
// word; words of two characters or fewer are returned unchanged. Characters
// other than a, e, i, o, u (and y after a consonant) count as consonants, so
// digits pass through untouched.
std::string PorterStem(std::string_view word);

}  // namespace patchlink

#endif  // PATCHLINK_PORTER_STEMMER_H_
