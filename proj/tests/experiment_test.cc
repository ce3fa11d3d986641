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

#include <set>
#include <string>
#include <vector>

#include "fairaudit/experiment/desk_data.h"
#include "fairaudit/experiment/sweep.h"
#include "fairaudit/metrics/fairness.h"
#include "fairaudit/metrics/joint_counts.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairaudit {
namespace {

using ::testing::StartsWith;

TEST(DeskDataTest, ShapeAndPlantedBaseRates) {
  ASSERT_OK_AND_ASSIGN(Dataset data, MakeDeskData(kDeskDataRows, 1));
  EXPECT_EQ(data.num_rows(), 25000u);
  EXPECT_EQ(data.schema().FeatureIndices().size(), 8u);
  const JointCounts c = CountJoint(data);
  auto base_rate = [&](int a) {
    return (c.at(a, 1, 0) + c.at(a, 1, 1)) /
           (c.at(a, 0, 0) + c.at(a, 0, 1) + c.at(a, 1, 0) + c.at(a, 1, 1));
  };
  EXPECT_GT(base_rate(0) - base_rate(1), 0.05);
  ASSERT_OK_AND_ASSIGN(Dataset again, MakeDeskData(kDeskDataRows, 1));
  EXPECT_EQ(again, data);
}

SweepConfig SmallConfig() {
  SweepConfig config;
  config.axis = SweepAxis::kEpsilon;
  config.grid = {1, 10};
  config.repetitions = 2;
  config.base_seed = 3;
  config.n_prime = 500;
  return config;
}

class SweepTest : public ::testing::Test {
 protected:
  void SetUp() override { data_ = *MakeDeskData(3000, 2); }
  Dataset data_{DeskSchema()};
};

TEST_F(SweepTest, OneRowPerCellAndConstantReference) {
  const SweepConfig config = SmallConfig();
  ASSERT_OK_AND_ASSIGN(SweepResult result, RunSweep(data_, config));
  EXPECT_EQ(result.rows.size(), 3u * 2 * 2 * 3);
  std::set<std::pair<int, double>> references;
  for (const SweepRow& row : result.rows) {
    references.insert({static_cast<int>(row.metric), row.reference});
    if (row.estimate) {
      EXPECT_NEAR(*row.absolute_error, std::abs(*row.estimate - row.reference),
                  1e-15);
    }
  }
  EXPECT_EQ(references.size(), 3u);
  EXPECT_THAT(SweepCsv(result),
              StartsWith("mechanism,axis,axis_value,repetition,metric,"
                         "estimate,reference,absolute_error\n"));
}

TEST_F(SweepTest, ThreadCountDoesNotChangeOutput) {
  SweepConfig config = SmallConfig();
  ASSERT_OK_AND_ASSIGN(SweepResult serial, RunSweep(data_, config));
  config.threads = 3;
  ASSERT_OK_AND_ASSIGN(SweepResult parallel, RunSweep(data_, config));
  EXPECT_EQ(SweepCsv(serial), SweepCsv(parallel));
}

TEST_F(SweepTest, SampleSizeAxis) {
  SweepConfig config = SmallConfig();
  config.axis = SweepAxis::kSampleSize;
  config.grid = {250, 500};
  config.mechanisms = {SweepMechanism::kGrr};
  config.metrics = {Metric::kDemographicParity};
  ASSERT_OK_AND_ASSIGN(SweepResult result, RunSweep(data_, config));
  EXPECT_EQ(result.rows.size(), 4u);
  EXPECT_EQ(result.rows.front().axis_value, 250);
}

TEST_F(SweepTest, RejectsBadConfig) {
  SweepConfig config = SmallConfig();
  config.grid = {};
  EXPECT_FALSE(RunSweep(data_, config).ok());
  config = SmallConfig();
  config.grid = {1, -2};
  EXPECT_FALSE(RunSweep(data_, config).ok());
  config = SmallConfig();
  config.repetitions = 0;
  EXPECT_FALSE(RunSweep(data_, config).ok());
}

}  // namespace
}  // namespace fairaudit
