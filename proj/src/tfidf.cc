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

#include "patchlink/tfidf.h"

#include <algorithm>
#include <cmath>

#include "patchlink/error.h"

namespace patchlink {

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (auto& entry : entries) {
    if (entry.second < 0.0) {
      throw Error(ErrorCode::kValidation, "negative weight for term " + entry.first);
    }
    if (!entries_.empty() && entries_.back().first == entry.first) {
      throw Error(ErrorCode::kValidation, "duplicate term " + entry.first);
    }
    if (entry.second != 0.0) entries_.push_back(std::move(entry));
  }
}

double SparseVector::Weight(std::string_view term) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), term,
      [](const Entry& e, std::string_view t) { return e.first < t; });
  return it != entries_.end() && it->first == term ? it->second : 0.0;
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (const auto& [term, weight] : entries_) sum += weight * weight;
  return std::sqrt(sum);
}

double Cosine(const SparseVector& u, const SparseVector& v) {
  if (u.empty() || v.empty()) return 0.0;
  const auto& a = u.entries();
  const auto& b = v.entries();
  double dot = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int order = a[i].first.compare(b[j].first);
    if (order == 0) {
      dot += a[i].second * b[j].second;
      ++i;
      ++j;
    } else if (order < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::clamp(dot, 0.0, 1.0);
}

double TfIdfIndex::Idf(std::string_view term) const {
  const auto it = doc_freq_.find(term);
  if (it == doc_freq_.end()) return 0.0;
  return std::log2(static_cast<double>(n_docs_) / static_cast<double>(it->second));
}

SparseVector TfIdfIndex::Vectorize(const TokenSequence& tokens) const {
  std::map<std::string_view, std::size_t> counts;
  for (const auto& token : tokens.tokens) ++counts[token];
  std::vector<SparseVector::Entry> weights;
  double sum_squares = 0.0;
  for (const auto& [term, tf] : counts) {
    const double weight = static_cast<double>(tf) * Idf(term);
    if (weight == 0.0) continue;
    weights.emplace_back(std::string(term), weight);
    sum_squares += weight * weight;
  }
  const double norm = std::sqrt(sum_squares);
  for (auto& entry : weights) entry.second /= norm;
  return SparseVector(std::move(weights));
}

TfIdfIndex BuildIndex(const std::map<PatchId, TokenSequence>& docs) {
  if (docs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no documents to index");
  TfIdfIndex index;
  index.n_docs_ = docs.size();
  for (const auto& [id, doc] : docs) {
    std::vector<std::string_view> unique(doc.tokens.begin(), doc.tokens.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (std::string_view term : unique) {
      const auto it = index.doc_freq_.find(term);
      if (it == index.doc_freq_.end()) {
        index.doc_freq_.emplace(std::string(term), 1);
      } else {
        ++it->second;
      }
    }
  }
  for (const auto& [id, doc] : docs) {
    index.doc_vectors_.emplace(id, index.Vectorize(doc));
  }
  return index;
}

}  // namespace patchlink
