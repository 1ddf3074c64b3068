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

#include "patchlink/report.h"

#include <charconv>
#include <map>
#include <ostream>
#include <tuple>

#include "json.hpp"
#include "patchlink/error.h"

namespace patchlink {

std::string FormatNumber(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::vector<ReportRow> EvaluateCell(const ReportCell& cell, const ResultMap& results,
                                    std::span<const GroundTruthEntry> ground_truth,
                                    int k_max) {
  if (k_max < kMinCutoff || k_max > kMaxCutoff) {
    throw Error(ErrorCode::kRange, "k_max must lie in [1, 10]");
  }
  std::vector<std::optional<LinkageType>> types = {std::nullopt};
  for (LinkageType type : kAllLinkageTypes) types.push_back(type);

  std::vector<ReportRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    const RetrievalCounts all = CountRetrieved(results, ground_truth, k, std::nullopt);
    for (const auto& type : types) {
      const RetrievalCounts counts =
          type ? CountRetrieved(results, ground_truth, k, type) : all;
      ReportRow row;
      row.project = cell.project;
      row.dataset = cell.dataset;
      row.interval_days = cell.interval_days;
      row.model = cell.model;
      row.k = k;
      row.linkage_type = type;
      row.ground_truth = counts.ground_truth;
      row.retrieved = counts.retrieved;
      if (counts.ground_truth > 0) {
        const auto g = static_cast<double>(counts.ground_truth);
        row.recall = static_cast<double>(counts.retrieved) / g;
        row.mrr = counts.reciprocal_rank_sum / g;
      }
      if (type && all.retrieved > 0) {
        row.precision =
            static_cast<double>(counts.retrieved) / static_cast<double>(all.retrieved);
      }
      rows.push_back(std::move(row));
    }
  }
  CheckReportIdentities(rows);
  return rows;
}

void CheckReportIdentities(std::span<const ReportRow> rows) {
  auto fail = [](const ReportRow& row, const std::string& what) {
    throw Error(ErrorCode::kInternal,
                "metric identity violated (" + std::string(ModelTag(row.model)) +
                    ", interval " + FormatNumber(row.interval_days) + ", k=" +
                    std::to_string(row.k) + "): " + what);
  };
  using CellKey = std::tuple<std::string, std::string, double, Model, int>;
  std::map<CellKey, std::pair<std::size_t, std::size_t>> all_counts;
  std::map<CellKey, std::pair<std::size_t, std::size_t>> type_sums;
  for (const auto& row : rows) {
    if (row.retrieved > row.ground_truth) fail(row, "|D| > |G|");
    if (row.recall && row.mrr && *row.mrr > *row.recall) fail(row, "MRR > recall");
    for (const auto& rate : {row.recall, row.precision, row.mrr}) {
      if (rate && (*rate < 0.0 || *rate > 1.0)) fail(row, "rate outside [0, 1]");
    }
    const CellKey key{row.project, row.dataset, row.interval_days, row.model, row.k};
    if (row.linkage_type) {
      auto& sums = type_sums[key];
      sums.first += row.ground_truth;
      sums.second += row.retrieved;
    } else {
      all_counts[key] = {row.ground_truth, row.retrieved};
    }
  }
  for (const auto& [key, sums] : type_sums) {
    const auto it = all_counts.find(key);
    if (it == all_counts.end()) continue;
    if (it->second.first == sums.first && it->second.second != sums.second) {
      throw Error(ErrorCode::kInternal,
                  "metric identity violated: typed |D| counts do not sum to |D|");
    }
  }
}

namespace {

std::string OptionalNumber(const std::optional<double>& value) {
  return value ? FormatNumber(*value) : std::string();
}

std::string TypeLabel(const std::optional<LinkageType>& type) {
  return type ? std::string(LinkageTypeName(*type)) : std::string("ALL");
}

nlohmann::ordered_json OptionalJson(const std::optional<double>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json();
}

}  // namespace

void WriteReportCsv(const EvaluationReport& report, std::ostream& out) {
  out << "project,dataset,interval_days,model,k,linkage_type,ground_truth,"
         "retrieved,recall,precision,mrr\n";
  for (const auto& row : report.rows) {
    out << row.project << ',' << row.dataset << ',' << FormatNumber(row.interval_days)
        << ',' << ModelTag(row.model) << ',' << row.k << ','
        << TypeLabel(row.linkage_type) << ',' << row.ground_truth << ','
        << row.retrieved << ',' << OptionalNumber(row.recall) << ','
        << OptionalNumber(row.precision) << ',' << OptionalNumber(row.mrr) << '\n';
  }
}

void WriteReportJson(const EvaluationReport& report, std::ostream& out) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json item;
    item["project"] = row.project;
    item["dataset"] = row.dataset;
    item["interval_days"] = row.interval_days;
    item["model"] = ModelTag(row.model);
    item["k"] = row.k;
    item["linkage_type"] = TypeLabel(row.linkage_type);
    item["ground_truth"] = row.ground_truth;
    item["retrieved"] = row.retrieved;
    item["recall"] = OptionalJson(row.recall);
    item["precision"] = OptionalJson(row.precision);
    item["mrr"] = OptionalJson(row.mrr);
    rows.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace patchlink
