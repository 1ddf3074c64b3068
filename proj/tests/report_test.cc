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

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "patchlink/error.h"
#include "patchlink/report.h"

namespace patchlink {
namespace {

CandidateList Ranked(PatchId query, std::vector<PatchId> order) {
  std::vector<ScoredCandidate> scored;
  for (std::size_t i = 0; i < order.size(); ++i) {
    scored.push_back({order[i], static_cast<double>(order.size() - i), 0});
  }
  return MakeCandidateList(query, Model::kTextualContent, std::move(scored));
}

struct Fixture {
  ResultMap results;
  std::vector<GroundTruthEntry> truth;
};

Fixture MakeFixture() {
  Fixture f;
  f.results[1] = Ranked(1, {10, 11, 12});
  f.results[2] = Ranked(2, {20, 21});
  f.truth = {{1, 11, LinkageType::kAlternativeSolution, 0, 1},
             {1, 12, LinkageType::kDependency, 0, 1},
             {2, 20, LinkageType::kAlternativeSolution, 0, 1},
             {2, 29, LinkageType::kBroaderContext, 0, 1}};
  return f;
}

const ReportRow& Find(const std::vector<ReportRow>& rows, int k,
                      std::optional<LinkageType> type) {
  for (const auto& row : rows) {
    if (row.k == k && row.linkage_type == type) return row;
  }
  throw std::runtime_error("row not found");
}

TEST(EvaluateCell, GridAndValues) {
  const Fixture f = MakeFixture();
  const ReportCell cell{"demo", "interval", 7, Model::kTextualContent};
  const auto rows = EvaluateCell(cell, f.results, f.truth, 3);
  EXPECT_EQ(rows.size(), 3u * 5u);

  const ReportRow& all1 = Find(rows, 1, std::nullopt);
  EXPECT_EQ(all1.ground_truth, 4u);
  EXPECT_EQ(all1.retrieved, 1u);
  EXPECT_DOUBLE_EQ(*all1.recall, 0.25);
  EXPECT_FALSE(all1.precision.has_value());

  const ReportRow& all3 = Find(rows, 3, std::nullopt);
  EXPECT_EQ(all3.retrieved, 3u);
  EXPECT_DOUBLE_EQ(*all3.mrr, (0.5 + 1.0 / 3.0 + 1.0) / 4.0);

  const ReportRow& as3 = Find(rows, 3, LinkageType::kAlternativeSolution);
  EXPECT_DOUBLE_EQ(*as3.recall, 1.0);
  EXPECT_DOUBLE_EQ(*as3.precision, 2.0 / 3.0);

  const ReportRow& other = Find(rows, 2, LinkageType::kOther);
  EXPECT_EQ(other.ground_truth, 0u);
  EXPECT_FALSE(other.recall.has_value());
  EXPECT_DOUBLE_EQ(*other.precision, 0.0);
}

TEST(EvaluateCell, KMaxBounds) {
  const Fixture f = MakeFixture();
  const ReportCell cell{"demo", "interval", 7, Model::kTextualContent};
  for (const auto& row : EvaluateCell(cell, f.results, f.truth, 5)) EXPECT_LE(row.k, 5);
  EXPECT_THROW(EvaluateCell(cell, f.results, f.truth, 0), Error);
  EXPECT_THROW(EvaluateCell(cell, f.results, f.truth, 11), Error);
}

TEST(CheckReportIdentities, RejectsViolations) {
  ReportRow row;
  row.ground_truth = 2;
  row.retrieved = 1;
  row.recall = 0.5;
  row.mrr = 0.5;
  EXPECT_NO_THROW(CheckReportIdentities(std::vector{row}));

  ReportRow bad_mrr = row;
  bad_mrr.mrr = 0.75;
  EXPECT_THROW(CheckReportIdentities(std::vector{bad_mrr}), Error);

  ReportRow too_many = row;
  too_many.retrieved = 3;
  EXPECT_THROW(CheckReportIdentities(std::vector{too_many}), Error);

  ReportRow typed = row;
  typed.linkage_type = LinkageType::kOther;
  typed.retrieved = 0;
  typed.recall = 0.0;
  typed.mrr = 0.0;
  try {
    CheckReportIdentities(std::vector{row, typed});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternal);
  }
}

TEST(WriteReport, CsvAndJson) {
  const Fixture f = MakeFixture();
  EvaluationReport report;
  report.rows = EvaluateCell({"demo", "interval", 7, Model::kTextAndLocation}, f.results,
                             f.truth, 1);
  std::ostringstream csv;
  WriteReportCsv(report, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::string first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header,
            "project,dataset,interval_days,model,k,linkage_type,ground_truth,retrieved,"
            "recall,precision,mrr");
  EXPECT_EQ(first, "demo,interval,7,tc_fl_combined,1,ALL,4,1,0.25,,0.25");

  std::ostringstream json;
  WriteReportJson(report, json);
  const auto doc = nlohmann::json::parse(json.str());
  ASSERT_EQ(doc["rows"].size(), 5u);
  EXPECT_EQ(doc["rows"][0]["model"], "tc_fl_combined");
  EXPECT_TRUE(doc["rows"][0]["precision"].is_null());
  EXPECT_EQ(doc["rows"][1]["linkage_type"], "AlternativeSolution");
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(7), "7");
  EXPECT_EQ(FormatNumber(0.25), "0.25");
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.3333333333333333");
}

}  // namespace
}  // namespace patchlink
