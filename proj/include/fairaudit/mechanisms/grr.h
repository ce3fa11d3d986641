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

#ifndef FAIRAUDIT_MECHANISMS_GRR_H_
#define FAIRAUDIT_MECHANISMS_GRR_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/mechanisms/budget_ledger.h"
#include "fairaudit/util/random.h"

namespace fairaudit {

// Probability that generalized randomized response keeps the true value:
// e^eps / (e^eps + k - 1). kNoPrivacy gives 1.
absl::StatusOr<double> GrrRetentionProbability(double epsilon, int k);

// k x k channel of generalized randomized response: keep with probability p,
// otherwise report one of the other k-1 codes uniformly.
class GrrChannel {
 public:
  // epsilon > 0; kNoPrivacy yields the identity channel.
  static absl::StatusOr<GrrChannel> Create(double epsilon, int k);
  static GrrChannel Identity(int k);

  int k() const { return k_; }
  double epsilon() const { return epsilon_; }
  // Retention probability (diagonal).
  double p() const { return p_; }
  // Probability of each specific other code (off-diagonal).
  double q() const { return q_; }
  bool is_identity() const { return q_ == 0; }

  // P[report = out | true = in].
  double Transition(int in, int out) const { return in == out ? p_ : q_; }
  // Row-major k*k matrix.
  std::vector<double> Matrix() const;
  // Closed-form inverse of Matrix(), row-major. Fails when p == q.
  absl::StatusOr<std::vector<double>> InverseMatrix() const;
  // max over (i, j, out) of Transition(i,out) / Transition(j,out).
  double MaxLikelihoodRatio() const;

  int Apply(int code, Rng& rng) const;

  bool operator==(const GrrChannel&) const = default;

 private:
  GrrChannel(int k, double epsilon, double p, double q)
      : k_(k), epsilon_(epsilon), p_(p), q_(q) {}

  int k_;
  double epsilon_;
  double p_;
  double q_;
};

enum class EpsilonMode { kPerColumn, kTotalSplit };

std::string_view EpsilonModeName(EpsilonMode mode);
absl::StatusOr<EpsilonMode> ParseEpsilonMode(std::string_view name);

// Per-column budget for `columns` perturbed columns: epsilon itself in
// per-column mode, epsilon / columns in total-split mode.
double PerColumnEpsilon(double epsilon, EpsilonMode mode, size_t columns);

struct GrrColumnParams {
  std::string attribute;
  double epsilon = 0;
  int k = 0;
  double p = 0;
  bool operator==(const GrrColumnParams&) const = default;
};

struct GrrResult {
  Dataset dataset;
  std::vector<GrrColumnParams> columns;
  BudgetLedger ledger;
};

// Perturbs each selected column independently with its own GRR channel at
// `epsilon_per_column`. `columns` names the columns; empty selects all of
// them. Randomness is consumed row by row, left to right, from one
// generator seeded with `seed`.
absl::StatusOr<GrrResult> GrrPerturb(const Dataset& dataset,
                                     double epsilon_per_column,
                                     std::span<const std::string> columns,
                                     uint64_t seed);

}  // namespace fairaudit

#endif  // FAIRAUDIT_MECHANISMS_GRR_H_
