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

#include "fairaudit/metrics/report.h"

#include <charconv>
#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

std::string_view EstimatorName(Estimator estimator) {
  switch (estimator) {
    case Estimator::kEmpirical:
      return "empirical";
    case Estimator::kGrrDebiased:
      return "grr_debiased";
    case Estimator::kSynthetic:
      return "synthetic";
    case Estimator::kBlackbox:
      return "blackbox";
  }
  return "";
}

absl::StatusOr<Estimator> ParseEstimator(std::string_view name) {
  for (Estimator e : {Estimator::kEmpirical, Estimator::kGrrDebiased,
                      Estimator::kSynthetic, Estimator::kBlackbox}) {
    if (EstimatorName(e) == name) return e;
  }
  return absl::InvalidArgumentError(StrCat("unknown estimator '", name, "'"));
}

std::optional<double> FairnessReport::Get(Metric metric) const {
  switch (metric) {
    case Metric::kDemographicParity:
      return demographic_parity;
    case Metric::kEqualizedOdds:
      return equalized_odds;
    case Metric::kEqualityOfOpportunity:
      return equality_of_opportunity;
  }
  return std::nullopt;
}

void FairnessReport::Set(Metric metric, std::optional<double> value) {
  switch (metric) {
    case Metric::kDemographicParity:
      demographic_parity = value;
      break;
    case Metric::kEqualizedOdds:
      equalized_odds = value;
      break;
    case Metric::kEqualityOfOpportunity:
      equality_of_opportunity = value;
      break;
  }
}

std::string FairnessReport::Serialize() const {
  std::string out = StrCat("estimator=", EstimatorName(estimator), "\n",
                           "n_effective=", n_effective, "\n");
  for (Metric m : kAllMetrics) {
    const auto value = Get(m);
    StrAppend(&out, MetricName(m), "=",
              value.has_value() ? fmt::sprintf("%.17g", *value)
                                : std::string("absent"),
              "\n");
  }
  for (const std::string& note : notes) {
    StrAppend(&out, "warning=", note, "\n");
  }
  return out;
}

absl::StatusOr<FairnessReport> FairnessReport::Parse(std::string_view text) {
  FairnessReport report;
  for (std::string_view line : Split(text, '\n', true)) {
    const std::pair<std::string_view, std::string_view> kv =
        SplitOnce(line, '=');
    const auto& [key, value] = kv;
    if (key == "estimator") {
      ASSIGN_OR_RETURN(report.estimator, ParseEstimator(value));
    } else if (key == "n_effective") {
      if (!ParseInt64(value, &report.n_effective)) {
        return absl::InvalidArgumentError("bad n_effective");
      }
    } else if (key == "warning") {
      report.notes.emplace_back(value);
    } else {
      ASSIGN_OR_RETURN(const Metric metric, ParseMetric(key));
      if (value == "absent") {
        report.Set(metric, std::nullopt);
      } else {
        double v = 0;
        if (!ParseDouble(value, &v)) {
          return absl::InvalidArgumentError(StrCat("bad value for ", key));
        }
        report.Set(metric, v);
      }
    }
  }
  return report;
}

absl::StatusOr<FairnessReport> MakeFairnessReport(
    const JointCounts& counts, Estimator estimator,
    const ReportOptions& options) {
  const double total = counts.total();
  if (!(total > 0)) {
    return absl::FailedPreconditionError(
        "cannot report fairness on a table with no mass");
  }
  FairnessReport report;
  report.estimator = estimator;
  report.n_effective = options.n_effective >= 0
                           ? options.n_effective
                           : static_cast<int64_t>(std::llround(total));
  for (Metric metric : options.metrics) {
    if (RequiresGroundTruth(metric) && !options.ground_truth_available) {
      report.notes.push_back(
          StrCat(MetricName(metric), " requires ground truth"));
      continue;
    }
    auto value = ComputeMetric(metric, counts);
    if (!value.ok()) {
      report.notes.push_back(
          StrCat(MetricName(metric), " omitted: ", value.status().message()));
      continue;
    }
    report.Set(metric, *value);
  }
  return report;
}

}  // namespace fairaudit
