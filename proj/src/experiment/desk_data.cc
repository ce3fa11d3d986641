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

#include "fairaudit/experiment/desk_data.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/random.h"

namespace fairaudit {
namespace {

enum Column : size_t {
  kSex,
  kAge,
  kEducation,
  kHours,
  kOccupation,
  kMarital,
  kRegion,
  kWorkclass,
  kExperience,
  kIncome,
  kPredicted,
  kColumnCount
};

int Draw(Rng& rng, std::span<const double> weights) {
  return CategoricalSampler(weights).Sample(rng);
}

}  // namespace

Schema DeskSchema() {
  std::vector<AttributeSpec> specs(kColumnCount);
  specs[kSex] = {"sex", Role::kProtected, {"male", "female"}, std::nullopt};
  specs[kAge] = {"age_band",
                 Role::kFeature,
                 {"18-25", "26-35", "36-45", "46-55", "56+"},
                 std::nullopt};
  specs[kEducation] = {"education",
                       Role::kFeature,
                       {"basic", "secondary", "bachelor", "graduate"},
                       std::nullopt};
  specs[kHours] = {"hours",
                   Role::kFeature,
                   {"part_time", "full_time", "overtime"},
                   std::nullopt};
  specs[kOccupation] = {
      "occupation",
      Role::kFeature,
      {"service", "clerical", "sales", "craft", "technical", "managerial"},
      std::nullopt};
  specs[kMarital] = {"marital",
                     Role::kFeature,
                     {"single", "married", "separated"},
                     std::nullopt};
  specs[kRegion] = {"region",
                    Role::kFeature,
                    {"north", "south", "east", "west"},
                    std::nullopt};
  specs[kWorkclass] = {"workclass",
                       Role::kFeature,
                       {"private", "public", "self_employed", "nonprofit"},
                       std::nullopt};
  specs[kExperience] = {
      "experience", Role::kFeature, {"junior", "mid", "senior"}, std::nullopt};
  specs[kIncome] = {"income_high", Role::kTarget, {"no", "yes"}, std::nullopt};
  specs[kPredicted] = {
      "predicted_high", Role::kPrediction, {"no", "yes"}, std::nullopt};
  return *Schema::Create(std::move(specs));
}

absl::StatusOr<Dataset> MakeDeskData(int64_t rows, uint64_t seed) {
  if (rows < 0) return absl::InvalidArgumentError("rows must be nonnegative");
  static constexpr std::array<double, 5> kAgeWeights = {0.18, 0.25, 0.23, 0.19,
                                                        0.15};
  static constexpr std::array<double, 5> kAgeEffect = {-1.2, -0.3, 0.3, 0.5,
                                                       0.2};
  static constexpr std::array<double, 4> kEducationWeights = {0.2, 0.4, 0.28,
                                                              0.12};
  static constexpr std::array<double, 4> kEducationEffect = {-0.9, -0.2, 0.6,
                                                             1.1};
  static constexpr std::array<std::array<double, 3>, 2> kHoursWeights = {
      {{0.12, 0.68, 0.20}, {0.38, 0.55, 0.07}}};
  static constexpr std::array<double, 3> kHoursEffect = {-1.0, 0.0, 0.5};
  static constexpr std::array<std::array<double, 6>, 2> kOccupationWeights = {
      {{0.12, 0.10, 0.14, 0.26, 0.20, 0.18},
       {0.26, 0.28, 0.16, 0.04, 0.14, 0.12}}};
  static constexpr std::array<double, 6> kOccupationEffect = {-0.8, -0.4, 0.0,
                                                              0.1,  0.5,  0.9};
  static constexpr std::array<double, 3> kMaritalWeights = {0.35, 0.5, 0.15};
  static constexpr std::array<double, 3> kMaritalEffect = {-0.4, 0.4, -0.2};
  static constexpr std::array<double, 4> kRegionWeights = {0.3, 0.25, 0.25,
                                                           0.2};
  static constexpr std::array<double, 4> kRegionEffect = {0.1, -0.2, 0.2, 0.0};
  static constexpr std::array<double, 4> kWorkclassWeights = {0.65, 0.15, 0.12,
                                                              0.08};
  static constexpr std::array<double, 4> kWorkclassEffect = {0.0, 0.1, 0.3,
                                                             -0.3};
  static constexpr std::array<double, 3> kExperienceEffect = {-0.6, 0.0, 0.6};

  Schema schema = DeskSchema();
  std::vector<int32_t> codes(static_cast<size_t>(rows) * kColumnCount, 0);
  Rng rng(seed);
  for (int64_t r = 0; r < rows; ++r) {
    int32_t* row = codes.data() + r * kColumnCount;
    const int sex = Uniform01(rng) < 0.48 ? 1 : 0;
    row[kSex] = sex;
    row[kAge] = Draw(rng, kAgeWeights);
    row[kEducation] = Draw(rng, kEducationWeights);
    row[kHours] = Draw(rng, kHoursWeights[sex]);
    row[kOccupation] = Draw(rng, kOccupationWeights[sex]);
    row[kMarital] = Draw(rng, kMaritalWeights);
    row[kRegion] = Draw(rng, kRegionWeights);
    row[kWorkclass] = Draw(rng, kWorkclassWeights);
    // Experience tracks age.
    const double senior_bias = 0.25 * row[kAge];
    const std::array<double, 3> experience_weights = {
        std::max(0.05, 0.55 - senior_bias), 0.35,
        std::max(0.05, 0.10 + senior_bias)};
    row[kExperience] = Draw(rng, experience_weights);

    const double score =
        -0.7 + kAgeEffect[row[kAge]] + kEducationEffect[row[kEducation]] +
        kHoursEffect[row[kHours]] + kOccupationEffect[row[kOccupation]] +
        kMaritalEffect[row[kMarital]] + kRegionEffect[row[kRegion]] +
        kWorkclassEffect[row[kWorkclass]] +
        kExperienceEffect[row[kExperience]] - 0.35 * sex;
    const double p_high = 1.0 / (1.0 + std::exp(-score));
    row[kIncome] = Uniform01(rng) < p_high ? 1 : 0;
  }
  return Dataset::Create(std::move(schema), std::move(codes));
}

}  // namespace fairaudit
