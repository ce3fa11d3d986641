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

#include "fairaudit/protocol/auditor.h"

#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/mechanisms/debias.h"
#include "fairaudit/metrics/joint_counts.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

absl::StatusOr<GrrChannel> ChannelFor(const AuditRelease& release,
                                      const std::string& attribute) {
  for (const GrrColumnParams& c : release.grr_columns) {
    if (c.attribute != attribute) continue;
    ASSIGN_OR_RETURN(GrrChannel channel, GrrChannel::Create(c.epsilon, c.k));
    if (std::abs(channel.p() - c.p) > 1e-12) {
      return absl::DataLossError(
          StrCat("release metadata for ", attribute,
                 " has p inconsistent with its epsilon and k"));
    }
    return channel;
  }
  return absl::FailedPreconditionError(
      StrCat("release has no GRR channel metadata for ", attribute));
}

}  // namespace

absl::StatusOr<FairnessReport> AuditorEvaluate(const AuditRelease& release,
                                               const AuditRequest& request) {
  const Schema& schema = release.dataset.schema();
  if (schema.attribute(schema.protected_index()).name !=
      request.protected_attribute) {
    return absl::InvalidArgumentError(
        "release protected attribute does not match the request");
  }
  const JointCounts observed = CountJoint(release.dataset);
  ReportOptions options;
  options.metrics = request.requested_metrics;
  options.n_effective = static_cast<int64_t>(release.dataset.num_rows());

  if (release.mechanism == MechanismKind::kSynth) {
    return MakeFairnessReport(observed, Estimator::kSynthetic, options);
  }

  ASSIGN_OR_RETURN(
      GrrChannel a,
      ChannelFor(release, schema.attribute(schema.protected_index()).name));
  ASSIGN_OR_RETURN(
      GrrChannel y,
      ChannelFor(release, schema.attribute(schema.target_index()).name));
  ASSIGN_OR_RETURN(
      GrrChannel yhat,
      ChannelFor(release, schema.attribute(schema.prediction_index()).name));
  ASSIGN_OR_RETURN(DebiasResult debiased,
                   DebiasGrrCounts(observed, JointChannels{a, y, yhat}));
  ASSIGN_OR_RETURN(
      FairnessReport report,
      MakeFairnessReport(debiased.counts, Estimator::kGrrDebiased, options));
  report.notes.insert(report.notes.begin(), debiased.warnings.begin(),
                      debiased.warnings.end());
  return report;
}

absl::StatusOr<FairnessReport> ReferenceReport(
    const Dataset& test_set, const Classifier& model,
    const std::vector<Metric>& metrics) {
  if (test_set.num_rows() == 0) {
    return absl::FailedPreconditionError("reference needs a nonempty test set");
  }
  ASSIGN_OR_RETURN(const Dataset labeled, Label(model, test_set));
  ReportOptions options;
  options.metrics = metrics;
  return MakeFairnessReport(CountJoint(labeled), Estimator::kEmpirical,
                            options);
}

absl::StatusOr<Dataset> UniformQueries(const Schema& schema, int64_t count,
                                       uint64_t seed) {
  if (count < 1) {
    return absl::InvalidArgumentError("query_count must be at least 1");
  }
  const size_t width = schema.size();
  std::vector<int32_t> codes(static_cast<size_t>(count) * width, 0);
  Rng rng(seed);
  for (int64_t r = 0; r < count; ++r) {
    for (size_t c = 0; c < width; ++c) {
      if (c == schema.prediction_index()) continue;
      codes[r * width + c] = UniformInt(rng, schema.attribute(c).cardinality());
    }
  }
  return Dataset::Create(schema, std::move(codes));
}

absl::StatusOr<FairnessReport> BlackboxAudit(
    const BlackBoxConfig& config, const Schema& schema, const Classifier& model,
    const std::vector<Metric>& metrics) {
  ASSIGN_OR_RETURN(const Dataset queries,
                   UniformQueries(schema, config.query_count, config.seed));
  ASSIGN_OR_RETURN(const Dataset answered, Label(model, queries));
  ReportOptions options;
  options.metrics = metrics;
  return MakeFairnessReport(CountJoint(answered), Estimator::kBlackbox,
                            options);
}

}  // namespace fairaudit
