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

#include "fairaudit/bias/theorem_world.h"

#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/metrics/fairness.h"
#include "fairaudit/metrics/joint_counts.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

constexpr size_t kA = 0, kB = 1, kC = 2, kY = 3, kYhat = 4;

int TheoremRule(int a, int b, int c_half) { return (1 - b) * c_half + b * a; }

}  // namespace

absl::StatusOr<TheoremWorld> TheoremWorld::Create(double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) {
    return absl::InvalidArgumentError(
        StrCat("alpha must be in [0, 1], got ", alpha));
  }
  return TheoremWorld(alpha);
}

std::array<double, 4> TheoremWorld::Masses(Population population) const {
  if (population == Population::kD) return {0.0, 0.0, 0.5, 0.5};
  return {alpha_ / 2, alpha_ / 2, (1 - alpha_) / 2, (1 - alpha_) / 2};
}

AnalyticGap ComputeAnalyticGap(const TheoremWorld& world) {
  // P[M=1 | a, b]: b=1 copies a; b=0 is [c > 1/2], which has probability 1/2.
  auto positive_rate = [](int a, int b) { return b == 1 ? a : 0.5; };
  // a and b are independent in both populations, so P[b | a] = P[b] and
  // DP = sum_b (P[M=1|a=1,b] - P[M=1|a=0,b]) * P[b].
  auto parity = [&](double p_switch) {
    return (positive_rate(1, 1) - positive_rate(0, 1)) * p_switch +
           (positive_rate(1, 0) - positive_rate(0, 0)) * (1 - p_switch);
  };
  return AnalyticGap{std::abs(parity(0.0)), std::abs(parity(world.alpha()))};
}

Schema TheoremSchema() {
  std::vector<AttributeSpec> specs = {
      {"a", Role::kProtected, {"0", "1"}, std::nullopt},
      {"b", Role::kFeature, {"0", "1"}, std::nullopt},
      {"c_half", Role::kFeature, {"le_half", "gt_half"}, std::nullopt},
      {"y", Role::kTarget, {"0", "1"}, std::nullopt},
      {"yhat", Role::kPrediction, {"0", "1"}, std::nullopt},
  };
  return *Schema::Create(std::move(specs));
}

absl::StatusOr<std::vector<size_t>> TheoremModel::BindColumns(
    const Schema& schema) const {
  std::vector<size_t> columns;
  for (const char* name : {"a", "b", "c_half"}) {
    const auto index = schema.IndexOf(name);
    if (!index.has_value() || schema.attribute(*index).cardinality() != 2) {
      return absl::InvalidArgumentError(
          StrCat("schema lacks binary column ", name));
    }
    columns.push_back(*index);
  }
  return columns;
}

int TheoremModel::PredictInputs(std::span<const int32_t> inputs) const {
  return TheoremRule(inputs[0], inputs[1], inputs[2]);
}

absl::StatusOr<Dataset> SampleWorld(const TheoremWorld& world,
                                    Population population, int64_t n,
                                    uint64_t seed) {
  if (n < 1) return absl::InvalidArgumentError("n must be at least 1");
  const double p_switch = population == Population::kD ? 0.0 : world.alpha();
  Schema schema = TheoremSchema();
  std::vector<int32_t> codes(static_cast<size_t>(n) * schema.size());
  Rng rng(seed);
  for (int64_t r = 0; r < n; ++r) {
    int32_t* row = codes.data() + r * schema.size();
    // Fixed draw order (a, b, c) so populations share uniforms under a seed.
    row[kA] = Uniform01(rng) < 0.5 ? 1 : 0;
    row[kB] = Uniform01(rng) < p_switch ? 1 : 0;
    row[kC] = Uniform01(rng) > 0.5 ? 1 : 0;
    row[kY] = 1;
    row[kYhat] = TheoremRule(row[kA], row[kB], row[kC]);
  }
  return Dataset::Create(std::move(schema), std::move(codes));
}

absl::StatusOr<std::vector<ShiftRow>> ShiftDemo(std::span<const double> alphas,
                                                int64_t n, uint64_t seed) {
  std::vector<ShiftRow> rows;
  for (double alpha : alphas) {
    ASSIGN_OR_RETURN(const TheoremWorld world, TheoremWorld::Create(alpha));
    ASSIGN_OR_RETURN(
        const Dataset truth_sample,
        SampleWorld(world, Population::kD, n, DeriveSeed(seed, 0)));
    ASSIGN_OR_RETURN(
        const Dataset audit_sample,
        SampleWorld(world, Population::kDPrime, n, DeriveSeed(seed, 1)));
    ASSIGN_OR_RETURN(const double truth,
                     DemographicParity(CountJoint(truth_sample)));
    ASSIGN_OR_RETURN(const double audited,
                     DemographicParity(CountJoint(audit_sample)));
    const AnalyticGap gap = ComputeAnalyticGap(world);
    rows.push_back(ShiftRow{alpha, std::abs(gap.mu_d_prime - gap.mu_d),
                            std::abs(audited - truth), n});
  }
  return rows;
}

std::string ShiftDemoCsv(std::span<const ShiftRow> rows) {
  std::string out = "alpha,analytic_gap,empirical_error,n\n";
  for (const ShiftRow& row : rows) {
    StrAppend(&out, fmt::sprintf("%.17g,%.17g,%.17g,%d\n", row.alpha,
                                 row.analytic_gap, row.empirical_error, row.n));
  }
  return out;
}

}  // namespace fairaudit
