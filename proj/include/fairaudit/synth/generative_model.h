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

#ifndef FAIRAUDIT_SYNTH_GENERATIVE_MODEL_H_
#define FAIRAUDIT_SYNTH_GENERATIVE_MODEL_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/mechanisms/budget_ledger.h"
#include "fairaudit/mechanisms/marginal.h"
#include "fairaudit/metrics/joint_counts.h"
#include "fairaudit/synth/marginal_plan.h"

namespace fairaudit {

// Sampler fitted from noisy marginals. (A, Y, Yhat) is drawn jointly from
// the projected three-way table; every feature is drawn independently from
// a one-way distribution obtained by marginalizing the projected two-way
// tables it appears in (averaged over those tables).
struct GenerativeModel {
  Schema schema;
  // P[A, Y, Yhat] indexed like JointCounts.
  std::array<double, JointCounts::kCells> joint{};
  // One distribution per schema column; empty for A, Y and Yhat.
  std::vector<std::vector<double>> feature_distributions;
  int64_t n_source = 0;
  MarginalPlan plan;
  // Every marginal as measured, before projection.
  std::vector<NoisyMarginal> measurements;

  nlohmann::json ToJson() const;
  static absl::StatusOr<GenerativeModel> FromJson(const nlohmann::json& json);
};

struct FitResult {
  GenerativeModel model;
  BudgetLedger ledger;
  std::vector<std::string> warnings;
};

// Measures every planned marginal with its share of `epsilon` (marginal i
// uses sub-seed DeriveSeed(seed, i)) and projects each onto the simplex.
// kNoPrivacy measures exactly.
absl::StatusOr<FitResult> FitGenerativeModel(const Dataset& dataset,
                                             const MarginalPlan& plan,
                                             double epsilon, uint64_t seed);

// `n_prime` i.i.d. rows. Per row the joint cell is drawn first, then the
// features in schema order.
absl::StatusOr<Dataset> GenerateSynthetic(const GenerativeModel& model,
                                          int64_t n_prime, uint64_t seed);

}  // namespace fairaudit

#endif  // FAIRAUDIT_SYNTH_GENERATIVE_MODEL_H_
