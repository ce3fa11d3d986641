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

#ifndef FAIRAUDIT_MECHANISMS_MARGINAL_H_
#define FAIRAUDIT_MECHANISMS_MARGINAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/mechanisms/budget_ledger.h"

namespace fairaudit {

enum class NoiseKind { kLaplace, kNone };

std::string_view NoiseKindName(NoiseKind kind);

// Contingency table over an attribute subset, row-major with the last
// attribute varying fastest.
struct NoisyMarginal {
  std::vector<std::string> attributes;
  std::vector<int> shape;
  std::vector<double> counts;
  double epsilon = 0;
  NoiseKind noise = NoiseKind::kNone;

  bool operator==(const NoisyMarginal&) const = default;
};

// Exact counts over `attributes`.
absl::StatusOr<NoisyMarginal> ExactMarginal(
    const Dataset& dataset, std::span<const std::string> attributes);

// Exact counts plus i.i.d. Laplace(1/epsilon) noise per cell. Under
// add/remove-one neighbours a count table has L1 sensitivity 1, so this is
// epsilon-DP. kNoPrivacy skips the noise. When `ledger` is non-null the
// spend is recorded there.
absl::StatusOr<NoisyMarginal> MeasureMarginal(
    const Dataset& dataset, std::span<const std::string> attributes,
    double epsilon, uint64_t seed, BudgetLedger* ledger = nullptr);

struct ProjectedTable {
  std::vector<double> values;
  std::vector<std::string> warnings;
};

// Clamps negative cells to zero and rescales to `target_total`. A table
// with no positive cell falls back to uniform with a warning.
ProjectedTable ProjectNonnegative(std::span<const double> table,
                                  double target_total);

}  // namespace fairaudit

#endif  // FAIRAUDIT_MECHANISMS_MARGINAL_H_
