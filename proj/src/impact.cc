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

#include "patchlink/impact.h"

#include <algorithm>

#include "patchlink/error.h"

namespace patchlink {
namespace {

double DaysBetween(Timestamp earlier, Timestamp later) {
  return static_cast<double>(later - earlier) / kSecondsPerDay;
}

// Number of revisions uploaded no later than `time`.
int RevisionsUpTo(const Patch& patch, Timestamp time) {
  return static_cast<int>(
      std::upper_bound(patch.revisions.begin(), patch.revisions.end(), time) -
      patch.revisions.begin());
}

}  // namespace

ImpactMetrics ComputeImpactMetrics(const Patch& source, const GroundTruthEntry& record) {
  if (record.source_id != source.id) {
    throw Error(ErrorCode::kValidation, "linkage record belongs to patch " +
                                            std::to_string(record.source_id) +
                                            ", not " + std::to_string(source.id));
  }
  if (record.notify_time < source.created_at) {
    throw Error(ErrorCode::kValidation,
                "patch " + std::to_string(source.id) +
                    ": linkage notified before the patch was submitted");
  }
  const int revision_count = static_cast<int>(source.revisions.size());
  if (record.notify_revision < 1 || record.notify_revision > revision_count) {
    throw Error(ErrorCode::kValidation,
                "patch " + std::to_string(source.id) + ": notify revision " +
                    std::to_string(record.notify_revision) + " does not exist");
  }

  ImpactMetrics metrics;
  metrics.first_notify_time = DaysBetween(source.created_at, record.notify_time);
  metrics.first_notify_revisions = record.notify_revision;
  if (const auto submission = ComputeSubmissionMetrics(source)) {
    const Timestamp decided = *source.decision.time;
    metrics.notify_to_decision_time =
        std::max(0.0, DaysBetween(record.notify_time, decided));
    metrics.notify_to_decision_revisions =
        std::max(0, RevisionsUpTo(source, decided) - record.notify_revision);
    metrics.submit_to_decision_time = submission->submit_to_decision_time;
    metrics.submit_to_decision_revisions = submission->submit_to_decision_revisions;
  }
  return metrics;
}

std::optional<SubmissionMetrics> ComputeSubmissionMetrics(const Patch& patch) {
  if (!patch.decision.decided() || !patch.decision.time) return std::nullopt;
  SubmissionMetrics metrics;
  metrics.submit_to_decision_time = DaysBetween(patch.created_at, *patch.decision.time);
  metrics.submit_to_decision_revisions = RevisionsUpTo(patch, *patch.decision.time);
  return metrics;
}

}  // namespace patchlink
