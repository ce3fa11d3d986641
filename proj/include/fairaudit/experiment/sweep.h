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

#ifndef FAIRAUDIT_EXPERIMENT_SWEEP_H_
#define FAIRAUDIT_EXPERIMENT_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/mechanisms/grr.h"
#include "fairaudit/metrics/fairness.h"
#include "fairaudit/metrics/report.h"
#include "fairaudit/synth/marginal_plan.h"

namespace fairaudit {

enum class SweepAxis { kSampleSize, kEpsilon };
enum class SweepMechanism { kGrr, kSynth, kBlackbox };

std::string_view SweepAxisName(SweepAxis axis);
absl::StatusOr<SweepAxis> ParseSweepAxis(std::string_view name);
std::string_view SweepMechanismName(SweepMechanism mechanism);
absl::StatusOr<SweepMechanism> ParseSweepMechanism(std::string_view name);

struct SweepConfig {
  SweepAxis axis = SweepAxis::kSampleSize;
  // n' values for kSampleSize, epsilon values for kEpsilon.
  std::vector<double> grid;
  int repetitions = 10;
  uint64_t base_seed = 0;
  std::vector<SweepMechanism> mechanisms = {
      SweepMechanism::kGrr, SweepMechanism::kSynth, SweepMechanism::kBlackbox};
  std::vector<Metric> metrics = {std::begin(kAllMetrics),
                                 std::end(kAllMetrics)};
  // Held fixed along the other axis.
  double epsilon = 10.0;
  int64_t n_prime = 5000;
  EpsilonMode epsilon_mode = EpsilonMode::kPerColumn;
  double train_fraction = 0.8;
  PlanOptions plan;
  // Worker threads; results do not depend on this.
  int threads = 1;
};

struct SweepRow {
  SweepMechanism mechanism = SweepMechanism::kGrr;
  double axis_value = 0;
  int repetition = 0;
  Metric metric = Metric::kDemographicParity;
  std::optional<double> estimate;  // absent when undefined on the release
  double reference = 0;
  std::optional<double> absolute_error;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::kSampleSize;
  FairnessReport reference;
  std::vector<SweepRow> rows;
};

// Splits `data` once, trains Naive Bayes on the train part and scores every
// (mechanism, grid value, repetition) cell against the test-set reference.
absl::StatusOr<SweepResult> RunSweep(const Dataset& data,
                                     const SweepConfig& config);

std::string SweepCsv(const SweepResult& result);

}  // namespace fairaudit

#endif  // FAIRAUDIT_EXPERIMENT_SWEEP_H_
