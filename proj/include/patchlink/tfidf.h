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

#ifndef PATCHLINK_TFIDF_H_
#define PATCHLINK_TFIDF_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patchlink/patch.h"
#include "patchlink/text_preprocess.h"

namespace patchlink {

// Term weights sorted by term; zero weights are never stored.
class SparseVector {
 public:
  using Entry = std::pair<std::string, double>;

  SparseVector() = default;
  // Entries may come in any order; zero weights are dropped. Throws
  // kValidation on a duplicate term or a negative weight.
  explicit SparseVector(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  double Weight(std::string_view term) const;
  double Norm() const;

 private:
  std::vector<Entry> entries_;
};

// Dot product of two unit vectors; 0 when either is all-zero. Clamped to
// [0, 1].
double Cosine(const SparseVector& u, const SparseVector& v);

// tf-idf model over a document set: weight = tf(t, d) * log2(N / df(t)),
// then L2-normalised per document.
class TfIdfIndex {
 public:
  std::size_t n_docs() const { return n_docs_; }
  const std::map<std::string, std::size_t, std::less<>>& doc_freq() const {
    return doc_freq_;
  }
  const std::map<PatchId, SparseVector>& doc_vectors() const { return doc_vectors_; }

  double Idf(std::string_view term) const;

  // Weights arbitrary text against this index. Terms the index has never seen
  // are dropped.
  SparseVector Vectorize(const TokenSequence& tokens) const;

 private:
  friend TfIdfIndex BuildIndex(const std::map<PatchId, TokenSequence>& docs);

  std::size_t n_docs_ = 0;
  std::map<std::string, std::size_t, std::less<>> doc_freq_;
  std::map<PatchId, SparseVector> doc_vectors_;
};

// Throws Error(kEmptyCorpus) on an empty document set.
TfIdfIndex BuildIndex(const std::map<PatchId, TokenSequence>& docs);

}  // namespace patchlink

#endif  // PATCHLINK_TFIDF_H_
