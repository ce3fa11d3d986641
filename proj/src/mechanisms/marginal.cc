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

#include "fairaudit/mechanisms/marginal.h"

#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

std::string_view NoiseKindName(NoiseKind kind) {
  return kind == NoiseKind::kLaplace ? "laplace" : "none";
}

absl::StatusOr<NoisyMarginal> ExactMarginal(
    const Dataset& dataset, std::span<const std::string> attributes) {
  if (attributes.empty()) {
    return absl::InvalidArgumentError("marginal needs at least one attribute");
  }
  const Schema& schema = dataset.schema();
  NoisyMarginal marginal;
  std::vector<size_t> columns;
  size_t cells = 1;
  for (const std::string& name : attributes) {
    const auto index = schema.IndexOf(name);
    if (!index.has_value()) {
      return absl::InvalidArgumentError(StrCat("unknown attribute ", name));
    }
    columns.push_back(*index);
    marginal.attributes.push_back(name);
    marginal.shape.push_back(schema.attribute(*index).cardinality());
    cells *= static_cast<size_t>(marginal.shape.back());
  }
  marginal.counts.assign(cells, 0.0);
  for (size_t r = 0; r < dataset.num_rows(); ++r) {
    const auto row = dataset.row(r);
    size_t cell = 0;
    for (size_t i = 0; i < columns.size(); ++i) {
      cell = cell * marginal.shape[i] + row[columns[i]];
    }
    marginal.counts[cell] += 1;
  }
  marginal.epsilon = kNoPrivacy;
  marginal.noise = NoiseKind::kNone;
  return marginal;
}

absl::StatusOr<NoisyMarginal> MeasureMarginal(
    const Dataset& dataset, std::span<const std::string> attributes,
    double epsilon, uint64_t seed, BudgetLedger* ledger) {
  if (!(epsilon > 0)) {
    return absl::InvalidArgumentError(
        StrCat("epsilon must be positive, got ", epsilon));
  }
  ASSIGN_OR_RETURN(NoisyMarginal marginal, ExactMarginal(dataset, attributes));
  marginal.epsilon = epsilon;
  if (!std::isinf(epsilon)) {
    Rng rng(seed);
    const double scale = 1.0 / epsilon;
    for (double& c : marginal.counts) c += SampleLaplace(rng, scale);
    marginal.noise = NoiseKind::kLaplace;
  }
  if (ledger != nullptr) {
    ledger->Record(
        StrCat("marginal:", fmt::format("{}", fmt::join(attributes, "*"))),
        epsilon);
  }
  return marginal;
}

ProjectedTable ProjectNonnegative(std::span<const double> table,
                                  double target_total) {
  ProjectedTable out;
  out.values.assign(table.begin(), table.end());
  double sum = 0;
  for (double& v : out.values) {
    if (v < 0) v = 0;
    sum += v;
  }
  if (!(sum > 0)) {
    out.warnings.push_back("no positive cell after clamping; using uniform");
    const double each = target_total / static_cast<double>(out.values.size());
    for (double& v : out.values) v = each;
    return out;
  }
  for (double& v : out.values) v = v * target_total / sum;
  return out;
}

}  // namespace fairaudit
