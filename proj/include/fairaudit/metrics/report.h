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

#ifndef FAIRAUDIT_METRICS_REPORT_H_
#define FAIRAUDIT_METRICS_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/metrics/fairness.h"
#include "fairaudit/metrics/joint_counts.h"

namespace fairaudit {

enum class Estimator { kEmpirical, kGrrDebiased, kSynthetic, kBlackbox };

std::string_view EstimatorName(Estimator estimator);
absl::StatusOr<Estimator> ParseEstimator(std::string_view name);

struct FairnessReport {
  std::optional<double> demographic_parity;
  std::optional<double> equalized_odds;
  std::optional<double> equality_of_opportunity;
  Estimator estimator = Estimator::kEmpirical;
  int64_t n_effective = 0;
  std::vector<std::string> notes;

  std::optional<double> Get(Metric metric) const;
  void Set(Metric metric, std::optional<double> value);

  // Flat "key=value" lines in a fixed order; absent metrics read "absent",
  // each note is its own "warning=" line.
  std::string Serialize() const;
  static absl::StatusOr<FairnessReport> Parse(std::string_view text);

  bool operator==(const FairnessReport&) const = default;
};

struct ReportOptions {
  std::vector<Metric> metrics = {std::begin(kAllMetrics),
                                 std::end(kAllMetrics)};
  // When false, metrics that need the true label are left out with a note.
  bool ground_truth_available = true;
  int64_t n_effective = -1;  // defaults to round(total)
};

// Bundles the requested metrics. A metric whose strata are empty is left
// absent with a note; only a table with no mass at all is an error.
absl::StatusOr<FairnessReport> MakeFairnessReport(
    const JointCounts& counts, Estimator estimator,
    const ReportOptions& options = {});

}  // namespace fairaudit

#endif  // FAIRAUDIT_METRICS_REPORT_H_
