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

#ifndef FAIRAUDIT_BIAS_THEOREM_WORLD_H_
#define FAIRAUDIT_BIAS_THEOREM_WORLD_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/model/classifier.h"

namespace fairaudit {

// Worst-case population-bias construction. Inputs are (a, b, c) with a the
// protected bit, b a switch bit and c ~ U(0,1) independent of (a, b). The
// model is M(x) = (1 - b) * [c > 1/2] + b * a: fair when b = 0, maximally
// unfair when b = 1. Under D the switch is never on; under D' it is on with
// probability alpha, so TV(D, D') = alpha while the demographic parity of M
// moves from 0 to alpha.
enum class Population { kD, kDPrime };

class TheoremWorld {
 public:
  static absl::StatusOr<TheoremWorld> Create(double alpha);

  double alpha() const { return alpha_; }

  // Masses of (a=1,b=1), (a=0,b=1), (a=1,b=0), (a=0,b=0).
  std::array<double, 4> Masses(Population population) const;

 private:
  explicit TheoremWorld(double alpha) : alpha_(alpha) {}
  double alpha_;
};

struct AnalyticGap {
  double mu_d = 0;
  double mu_d_prime = 0;
};

// Demographic parity of M under D and under D', evaluated in closed form by
// conditioning on b.
AnalyticGap ComputeAnalyticGap(const TheoremWorld& world);

// Columns: a (protected), b (feature), c_half (feature; 1 iff c > 1/2),
// y (target, always 1), yhat (prediction).
Schema TheoremSchema();

// M over TheoremSchema's (a, b, c_half) columns.
class TheoremModel : public Classifier {
 public:
  absl::StatusOr<std::vector<size_t>> BindColumns(
      const Schema& schema) const override;
  int PredictInputs(std::span<const int32_t> inputs) const override;
};

// n i.i.d. rows from the chosen population, labeled by M.
absl::StatusOr<Dataset> SampleWorld(const TheoremWorld& world,
                                    Population population, int64_t n,
                                    uint64_t seed);

struct ShiftRow {
  double alpha = 0;
  double analytic_gap = 0;
  // |DP measured on a D' sample - DP measured on a D sample|.
  double empirical_error = 0;
  int64_t n = 0;
};

// For each alpha, audits M with queries from D' while the truth comes from
// D. All grid points reuse the same sample seeds, so sampled switch bits are
// nested as alpha grows.
absl::StatusOr<std::vector<ShiftRow>> ShiftDemo(std::span<const double> alphas,
                                                int64_t n, uint64_t seed);

// "alpha,analytic_gap,empirical_error,n" CSV.
std::string ShiftDemoCsv(std::span<const ShiftRow> rows);

}  // namespace fairaudit

#endif  // FAIRAUDIT_BIAS_THEOREM_WORLD_H_
