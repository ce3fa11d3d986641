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

#include "fairaudit/experiment/sweep.h"

#include <atomic>
#include <cmath>
#include <thread>

#include "absl/status/status.h"
#include "fairaudit/data/split.h"
#include "fairaudit/model/naive_bayes.h"
#include "fairaudit/protocol/auditor.h"
#include "fairaudit/protocol/messages.h"
#include "fairaudit/protocol/platform.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

struct Cell {
  size_t mechanism;
  size_t grid_index;
  int repetition;
};

std::string FormatOptional(const std::optional<double>& value) {
  return value ? fmt::sprintf("%.17g", *value) : "NA";
}

}  // namespace

std::string_view SweepAxisName(SweepAxis axis) {
  return axis == SweepAxis::kSampleSize ? "sample_size" : "epsilon";
}

absl::StatusOr<SweepAxis> ParseSweepAxis(std::string_view name) {
  if (name == "sample_size") return SweepAxis::kSampleSize;
  if (name == "epsilon") return SweepAxis::kEpsilon;
  return absl::InvalidArgumentError(StrCat("unknown sweep axis '", name, "'"));
}

std::string_view SweepMechanismName(SweepMechanism mechanism) {
  switch (mechanism) {
    case SweepMechanism::kGrr:
      return "grr";
    case SweepMechanism::kSynth:
      return "synth";
    case SweepMechanism::kBlackbox:
      return "blackbox";
  }
  return "unknown";
}

absl::StatusOr<SweepMechanism> ParseSweepMechanism(std::string_view name) {
  for (SweepMechanism m : {SweepMechanism::kGrr, SweepMechanism::kSynth,
                           SweepMechanism::kBlackbox}) {
    if (SweepMechanismName(m) == name) return m;
  }
  return absl::InvalidArgumentError(StrCat("unknown mechanism '", name, "'"));
}

absl::StatusOr<SweepResult> RunSweep(const Dataset& data,
                                     const SweepConfig& config) {
  if (config.grid.empty()) return absl::InvalidArgumentError("empty grid");
  if (config.repetitions < 1) {
    return absl::InvalidArgumentError("repetitions must be positive");
  }
  if (config.mechanisms.empty() || config.metrics.empty()) {
    return absl::InvalidArgumentError("no mechanisms or metrics to sweep");
  }
  for (double v : config.grid) {
    if (!(v > 0)) {
      return absl::InvalidArgumentError("grid values must be positive");
    }
  }

  ASSIGN_OR_RETURN(TrainTestSplit split,
                   Split(data, config.train_fraction, config.base_seed));
  ASSIGN_OR_RETURN(NaiveBayesModel model, NaiveBayesModel::Train(split.train));
  SweepResult result;
  result.axis = config.axis;
  ASSIGN_OR_RETURN(result.reference,
                   ReferenceReport(split.test, model, config.metrics));
  for (Metric m : config.metrics) {
    if (!result.reference.Get(m)) {
      return absl::FailedPreconditionError(StrCat(
          "reference ", MetricName(m), " is undefined on the test split"));
    }
  }

  std::vector<Cell> cells;
  for (size_t m = 0; m < config.mechanisms.size(); ++m) {
    for (size_t g = 0; g < config.grid.size(); ++g) {
      for (int r = 0; r < config.repetitions; ++r) cells.push_back({m, g, r});
    }
  }
  const std::string protected_name =
      data.schema().attribute(data.schema().protected_index()).name;

  auto run_cell = [&](const Cell& cell) -> absl::StatusOr<FairnessReport> {
    const SweepMechanism mechanism = config.mechanisms[cell.mechanism];
    const double value = config.grid[cell.grid_index];
    const int64_t n_prime = config.axis == SweepAxis::kSampleSize
                                ? static_cast<int64_t>(std::llround(value))
                                : config.n_prime;
    const double epsilon =
        config.axis == SweepAxis::kEpsilon ? value : config.epsilon;
    const uint64_t seed = DeriveSeed(
        DeriveSeed(config.base_seed, 100 + static_cast<uint64_t>(mechanism)),
        cell.grid_index, static_cast<uint64_t>(cell.repetition));
    if (mechanism == SweepMechanism::kBlackbox) {
      return BlackboxAudit({n_prime, seed}, data.schema(), model,
                           config.metrics);
    }
    AuditRequest request;
    request.n_prime = n_prime;
    request.protected_attribute = protected_name;
    request.requested_metrics = config.metrics;
    request.mechanism = mechanism == SweepMechanism::kGrr
                            ? MechanismKind::kGrr
                            : MechanismKind::kSynth;
    request.epsilon = epsilon;
    request.epsilon_mode = config.epsilon_mode;
    PlatformOptions options;
    options.plan = config.plan;
    ASSIGN_OR_RETURN(
        AuditRelease release,
        PlatformRespond(request, split.test, model, seed, options));
    return AuditorEvaluate(release, request);
  };

  std::vector<std::optional<absl::StatusOr<FairnessReport>>> reports(
      cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) {
      reports[i] = run_cell(cells[i]);
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (size_t i = 0; i < cells.size(); ++i) {
    const absl::StatusOr<FairnessReport>& report = *reports[i];
    if (!report.ok()) return report.status();
    for (Metric metric : config.metrics) {
      SweepRow row;
      row.mechanism = config.mechanisms[cells[i].mechanism];
      row.axis_value = config.grid[cells[i].grid_index];
      row.repetition = cells[i].repetition;
      row.metric = metric;
      row.estimate = report->Get(metric);
      row.reference = *result.reference.Get(metric);
      if (row.estimate) {
        row.absolute_error = std::abs(*row.estimate - row.reference);
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string SweepCsv(const SweepResult& result) {
  std::string out =
      "mechanism,axis,axis_value,repetition,metric,estimate,reference,"
      "absolute_error\n";
  for (const SweepRow& row : result.rows) {
    StrAppend(&out, SweepMechanismName(row.mechanism), ",",
              SweepAxisName(result.axis), ",",
              fmt::sprintf("%.17g", row.axis_value), ",", row.repetition, ",",
              MetricName(row.metric), ",", FormatOptional(row.estimate), ",",
              fmt::sprintf("%.17g", row.reference), ",",
              FormatOptional(row.absolute_error), "\n");
  }
  return out;
}

}  // namespace fairaudit
