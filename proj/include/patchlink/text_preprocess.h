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

#ifndef PATCHLINK_TEXT_PREPROCESS_H_
#define PATCHLINK_TEXT_PREPROCESS_H_

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace patchlink {

// Lowercase, non-empty, stopword-free, Porter-stemmed terms.
struct TokenSequence {
  std::vector<std::string> tokens;

  bool operator==(const TokenSequence&) const = default;
};

class StopwordList {
 public:
  // The 127-word English list also shipped as data/stopwords.txt.
  static const StopwordList& English();
  // One word per line; blank lines and lines starting with '#' are ignored.
  static StopwordList FromStream(std::istream& in);
  static StopwordList FromFile(const std::string& path);

  explicit StopwordList(std::set<std::string, std::less<>> words)
      : words_(std::move(words)) {}

  bool Contains(std::string_view word) const { return words_.contains(word); }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

// Maximal runs of ASCII letters and digits, lowercased. Everything else,
// including non-ASCII bytes, separates tokens.
std::vector<std::string> Tokenize(std::string_view text);

// Tokenize, drop stopwords, stem.
TokenSequence Preprocess(std::string_view text,
                         const StopwordList& stopwords = StopwordList::English());

}  // namespace patchlink

#endif  // PATCHLINK_TEXT_PREPROCESS_H_
