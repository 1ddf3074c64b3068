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

#ifndef PATCHLINK_REPORT_H_
#define PATCHLINK_REPORT_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patchlink/candidate_list.h"
#include "patchlink/patch.h"
#include "patchlink/retrieval_metrics.h"

namespace patchlink {

// One cell of the evaluation grid. `linkage_type` nullopt is the ALL row.
// Undefined rates (empty G, or precision with nothing retrieved) are nullopt.
struct ReportRow {
  std::string project;
  std::string dataset;  // "interval" or "sample"
  double interval_days = 0.0;
  Model model = Model::kTextualContent;
  int k = 1;
  std::optional<LinkageType> linkage_type;
  std::size_t ground_truth = 0;  // |G| or |G_type|
  std::size_t retrieved = 0;     // |D| or |D_type|
  std::optional<double> recall;
  std::optional<double> precision;
  std::optional<double> mrr;
};

struct EvaluationReport {
  std::vector<ReportRow> rows;
};

struct ReportCell {
  std::string project;
  std::string dataset;
  double interval_days = 0.0;
  Model model = Model::kTextualContent;
};

// Rows for k = 1..k_max and linkage types ALL plus each type, in that order.
// Checks the metric identities (|D| <= |G|, MRR <= recall, type counts
// summing to the ALL count) and throws kInternal if one is violated.
std::vector<ReportRow> EvaluateCell(const ReportCell& cell, const ResultMap& results,
                                    std::span<const GroundTruthEntry> ground_truth,
                                    int k_max);

// Throws kInternal describing the first violated identity.
void CheckReportIdentities(std::span<const ReportRow> rows);

// CSV header:
// project,dataset,interval_days,model,k,linkage_type,ground_truth,retrieved,
// recall,precision,mrr
void WriteReportCsv(const EvaluationReport& report, std::ostream& out);
void WriteReportJson(const EvaluationReport& report, std::ostream& out);

// Shortest round-trip decimal form.
std::string FormatNumber(double value);

}  // namespace patchlink

#endif  // PATCHLINK_REPORT_H_
