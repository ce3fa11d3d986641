// Copyright 2026 The Fairaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRAUDIT_PROTOCOL_AUDITOR_H_
#define FAIRAUDIT_PROTOCOL_AUDITOR_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/metrics/report.h"
#include "fairaudit/model/classifier.h"
#include "fairaudit/protocol/messages.h"

namespace fairaudit {

// Auditor side of the final step. For GRR releases the released (A, Y, Yhat)
// table is debiased with the channels described in the metadata; synthetic
// releases are measured directly. Pure post-processing: the release, and so
// its ledger, is only read.
absl::StatusOr<FairnessReport> AuditorEvaluate(const AuditRelease& release,
                                               const AuditRequest& request);

// The value an audit tries to estimate: the empirical report on the held-out
// test set after labeling it with the model.
absl::StatusOr<FairnessReport> ReferenceReport(
    const Dataset& test_set, const Classifier& model,
    const std::vector<Metric>& metrics = {std::begin(kAllMetrics),
                                          std::end(kAllMetrics)});

struct BlackBoxConfig {
  int64_t query_count = 1000;
  uint64_t seed = 0;
};

// Baseline auditor that knows the attribute domains but not the data
// distribution: every attribute, the true label included, is drawn
// uniformly from its codes, and the model labels the queries.
absl::StatusOr<FairnessReport> BlackboxAudit(
    const BlackBoxConfig& config, const Schema& schema, const Classifier& model,
    const std::vector<Metric>& metrics = {std::begin(kAllMetrics),
                                          std::end(kAllMetrics)});

// The uniform query set BlackboxAudit draws, before labeling.
absl::StatusOr<Dataset> UniformQueries(const Schema& schema, int64_t count,
                                       uint64_t seed);

}  // namespace fairaudit

#endif  // FAIRAUDIT_PROTOCOL_AUDITOR_H_
