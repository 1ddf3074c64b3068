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

#ifndef PATCHLINK_IMPACT_H_
#define PATCHLINK_IMPACT_H_

#include <optional>

#include "patchlink/patch.h"

namespace patchlink {

// Review-process measurements of a patch that received a linkage. Times are
// fractional 86400-second days. The *_to_decision fields are absent while
// the patch is still open.
struct ImpactMetrics {
  double first_notify_time = 0.0;
  // 1-based revision the notifying comment is attached to; the initial
  // submission is revision 1.
  int first_notify_revisions = 1;
  std::optional<double> notify_to_decision_time;
  // Revisions uploaded after the notified one and before the decision.
  std::optional<int> notify_to_decision_revisions;
  std::optional<double> submit_to_decision_time;
  std::optional<int> submit_to_decision_revisions;
};

struct SubmissionMetrics {
  double submit_to_decision_time = 0.0;
  // Revisions uploaded up to the decision, counting the initial submission.
  int submit_to_decision_revisions = 1;
};

// Throws kValidation if the record does not belong to the patch, if the
// notification precedes the submission or if its revision does not exist.
ImpactMetrics ComputeImpactMetrics(const Patch& source, const GroundTruthEntry& record);

// nullopt for open patches.
std::optional<SubmissionMetrics> ComputeSubmissionMetrics(const Patch& patch);

}  // namespace patchlink

#endif  // PATCHLINK_IMPACT_H_
