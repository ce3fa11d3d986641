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

#ifndef FAIRAUDIT_METRICS_FAIRNESS_H_
#define FAIRAUDIT_METRICS_FAIRNESS_H_

#include <span>
#include <string_view>

#include "absl/status/statusor.h"
#include "fairaudit/metrics/joint_counts.h"

namespace fairaudit {

enum class Metric {
  kDemographicParity,
  kEqualizedOdds,
  kEqualityOfOpportunity
};

inline constexpr Metric kAllMetrics[] = {Metric::kDemographicParity,
                                         Metric::kEqualizedOdds,
                                         Metric::kEqualityOfOpportunity};

std::string_view MetricName(Metric metric);
absl::StatusOr<Metric> ParseMetric(std::string_view name);
bool RequiresGroundTruth(Metric metric);

// |P[Yhat=1 | A=1] - P[Yhat=1 | A=0]|. Fails if either group has no mass.
absl::StatusOr<double> DemographicParity(const JointCounts& counts);

// max over y of |P[Yhat=1 | Y=y, A=0] - P[Yhat=1 | Y=y, A=1]|. A label value
// with no mass in either group is outside the support of Y and is skipped;
// a label value present in only one group is an error naming the empty
// stratum.
absl::StatusOr<double> EqualizedOdds(const JointCounts& counts);

// The y=1 term of EqualizedOdds (true-positive-rate gap).
absl::StatusOr<double> EqualityOfOpportunity(const JointCounts& counts);

absl::StatusOr<double> ComputeMetric(Metric metric, const JointCounts& counts);

// Half the L1 distance between two probability vectors over the same index
// set. Each must sum to 1 within 1e-9.
absl::StatusOr<double> TotalVariationDistance(std::span<const double> p,
                                              std::span<const double> q);

}  // namespace fairaudit

#endif  // FAIRAUDIT_METRICS_FAIRNESS_H_
