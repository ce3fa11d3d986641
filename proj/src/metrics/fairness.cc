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

#include "fairaudit/metrics/fairness.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

// P[Yhat=1 | Y=y, A=a] with y fixed, or marginal over y when y < 0.
absl::StatusOr<double> PositiveRate(const JointCounts& c, int a, int y) {
  double mass = 0, positive = 0;
  for (int yy = 0; yy < 2; ++yy) {
    if (y >= 0 && yy != y) continue;
    mass += c.at(a, yy, 0) + c.at(a, yy, 1);
    positive += c.at(a, yy, 1);
  }
  if (!(mass > 0)) {
    return absl::FailedPreconditionError(
        y < 0 ? StrCat("undefined conditional: group A=", a, " has no mass")
              : StrCat("undefined conditional: stratum (Y=", y, ", A=", a,
                       ") is empty"));
  }
  return positive / mass;
}

double StratumMass(const JointCounts& c, int a, int y) {
  return c.at(a, y, 0) + c.at(a, y, 1);
}

absl::StatusOr<double> GapAtLabel(const JointCounts& c, int y) {
  ASSIGN_OR_RETURN(const double rate0, PositiveRate(c, 0, y));
  ASSIGN_OR_RETURN(const double rate1, PositiveRate(c, 1, y));
  return std::abs(rate0 - rate1);
}

}  // namespace

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kDemographicParity:
      return "demographic_parity";
    case Metric::kEqualizedOdds:
      return "equalized_odds";
    case Metric::kEqualityOfOpportunity:
      return "equality_of_opportunity";
  }
  return "";
}

absl::StatusOr<Metric> ParseMetric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (MetricName(m) == name) return m;
  }
  return absl::InvalidArgumentError(StrCat("unknown metric '", name, "'"));
}

bool RequiresGroundTruth(Metric metric) {
  return metric != Metric::kDemographicParity;
}

absl::StatusOr<double> DemographicParity(const JointCounts& counts) {
  ASSIGN_OR_RETURN(const double rate0, PositiveRate(counts, 0, -1));
  ASSIGN_OR_RETURN(const double rate1, PositiveRate(counts, 1, -1));
  return std::abs(rate1 - rate0);
}

absl::StatusOr<double> EqualizedOdds(const JointCounts& counts) {
  double worst = 0;
  bool any_label = false;
  for (int y = 0; y < 2; ++y) {
    if (!(StratumMass(counts, 0, y) > 0) && !(StratumMass(counts, 1, y) > 0)) {
      continue;
    }
    ASSIGN_OR_RETURN(const double gap, GapAtLabel(counts, y));
    worst = std::max(worst, gap);
    any_label = true;
  }
  if (!any_label) {
    return absl::FailedPreconditionError(
        "undefined conditional: no label value has mass");
  }
  return worst;
}

absl::StatusOr<double> EqualityOfOpportunity(const JointCounts& counts) {
  return GapAtLabel(counts, 1);
}

absl::StatusOr<double> ComputeMetric(Metric metric, const JointCounts& counts) {
  switch (metric) {
    case Metric::kDemographicParity:
      return DemographicParity(counts);
    case Metric::kEqualizedOdds:
      return EqualizedOdds(counts);
    case Metric::kEqualityOfOpportunity:
      return EqualityOfOpportunity(counts);
  }
  return absl::InternalError("unhandled metric");
}

absl::StatusOr<double> TotalVariationDistance(std::span<const double> p,
                                              std::span<const double> q) {
  if (p.size() != q.size()) {
    return absl::InvalidArgumentError(
        StrCat("shape mismatch: ", p.size(), " vs ", q.size(), " cells"));
  }
  double sum_p = 0, sum_q = 0, l1 = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || q[i] < 0) {
      return absl::InvalidArgumentError("probabilities must be nonnegative");
    }
    sum_p += p[i];
    sum_q += q[i];
    l1 += std::abs(p[i] - q[i]);
  }
  if (std::abs(sum_p - 1) > 1e-9 || std::abs(sum_q - 1) > 1e-9) {
    return absl::InvalidArgumentError("distributions must sum to 1");
  }
  return 0.5 * l1;
}

}  // namespace fairaudit
