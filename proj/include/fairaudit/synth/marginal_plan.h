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

#ifndef FAIRAUDIT_SYNTH_MARGINAL_PLAN_H_
#define FAIRAUDIT_SYNTH_MARGINAL_PLAN_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/schema.h"
#include "nlohmann/json.hpp"

namespace fairaudit {

struct PlanOptions {
  int feature_pairs = 12;
  // Share of the budget for the four fairness marginals; the rest is split
  // evenly across feature pairs. With no feature pairs the fairness
  // marginals get everything.
  double fairness_share = 0.5;
};

// Which marginals the synthesizer measures and how the budget is divided.
struct MarginalPlan {
  // (A,Y), (A,Yhat), (Y,Yhat), (A,Y,Yhat), always in this order.
  std::vector<std::vector<std::string>> fairness_marginals;
  // Distinct unordered pairs of feature columns.
  std::vector<std::array<std::string, 2>> feature_pairs;
  double fairness_fraction_each = 0;
  double feature_fraction_each = 0;
  std::vector<std::string> warnings;

  // Fairness marginals followed by feature pairs.
  std::vector<std::vector<std::string>> Marginals() const;
  // Budget fraction of each entry of Marginals(); sums to 1.
  std::vector<double> BudgetFractions() const;

  nlohmann::json ToJson() const;
  static absl::StatusOr<MarginalPlan> FromJson(const nlohmann::json& json);

  bool operator==(const MarginalPlan&) const = default;
};

// The fairness marginals plus up to `feature_pairs` two-way feature pairs
// drawn uniformly without replacement. Pairs never include the protected,
// target or prediction column.
absl::StatusOr<MarginalPlan> PlanMarginals(const Schema& schema, uint64_t seed,
                                           const PlanOptions& options = {});

}  // namespace fairaudit

#endif  // FAIRAUDIT_SYNTH_MARGINAL_PLAN_H_
