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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fairaudit/metrics/fairness.h"
#include "fairaudit/metrics/joint_counts.h"
#include "fairaudit/metrics/report.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairaudit {
namespace {

using ::testing::HasSubstr;

// Positive-prediction rate in the rows matching (a, y), y < 0 meaning any y,
// tallied row by row.
double RowRate(const Dataset& data, int a, int y) {
  int hits = 0, total = 0;
  for (size_t i = 0; i < data.num_rows(); ++i) {
    if (data.at(i, 1) != a || (y >= 0 && data.at(i, 2) != y)) continue;
    ++total;
    hits += data.at(i, 3);
  }
  return static_cast<double>(hits) / total;
}

JointCounts Table(const std::array<double, 8>& cells) {
  return JointCounts(cells);
}

TEST(JointCountsTest, CountsListedCells) {
  // Rows (a, y, yhat) = (0,0,0), (0,1,1), (1,0,0), (1,1,1).
  const JointCounts counts =
      CountJoint(testing::DatasetFromCounts({1, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(counts.at(0, 0, 0), 1);
  EXPECT_EQ(counts.at(0, 1, 1), 1);
  EXPECT_EQ(counts.at(1, 0, 0), 1);
  EXPECT_EQ(counts.at(1, 1, 1), 1);
  EXPECT_EQ(counts.total(), 4);
}

TEST(JointCountsTest, EmptyDataset) {
  const JointCounts counts = CountJoint(Dataset(testing::SmallSchema()));
  EXPECT_EQ(counts.total(), 0);
}

TEST(JointCountsTest, MatchesHandTally) {
  std::mt19937 gen(7);
  std::vector<int32_t> codes;
  std::array<int, 8> tally{};
  for (int i = 0; i < 100; ++i) {
    const int f = gen() % 3, a = gen() % 2, y = gen() % 2, yhat = gen() % 2;
    codes.insert(codes.end(), {f, a, y, yhat});
    ++tally[a * 4 + y * 2 + yhat];
  }
  const JointCounts counts =
      CountJoint(*Dataset::Create(testing::SmallSchema(), codes));
  for (int c = 0; c < 8; ++c) EXPECT_EQ(counts.cells()[c], tally[c]);
}

TEST(DemographicParityTest, HandArithmetic) {
  // Group 0: 30 of 100 positive; group 1: 50 of 100.
  const JointCounts counts = Table({40, 10, 30, 20, 25, 25, 25, 25});
  ASSERT_OK_AND_ASSIGN(double dp, DemographicParity(counts));
  EXPECT_NEAR(dp, 0.2, 1e-15);
}

TEST(DemographicParityTest, EqualRatesGiveZero) {
  ASSERT_OK_AND_ASSIGN(double dp,
                       DemographicParity(Table({1, 1, 2, 2, 3, 3, 6, 6})));
  EXPECT_DOUBLE_EQ(dp, 0);
}

TEST(DemographicParityTest, EmptyGroupIsAnError) {
  const auto dp = DemographicParity(Table({1, 2, 3, 4, 0, 0, 0, 0}));
  ASSERT_FALSE(dp.ok());
  EXPECT_THAT(std::string(dp.status().message()),
              HasSubstr("undefined conditional"));
}

// Group a, stratum y: 100 rows with `rate` positives.
void Fill(JointCounts& counts, int a, int y, double rate) {
  counts.at(a, y, 1) = 100 * rate;
  counts.at(a, y, 0) = 100 * (1 - rate);
}

TEST(EqualizedOddsTest, MaxOfStratumGaps) {
  JointCounts counts;
  Fill(counts, 0, 0, 0.2);
  Fill(counts, 1, 0, 0.3);  // y=0 gap 0.1
  Fill(counts, 0, 1, 0.5);
  Fill(counts, 1, 1, 0.8);  // y=1 gap 0.3
  ASSERT_OK_AND_ASSIGN(double eo, EqualizedOdds(counts));
  ASSERT_OK_AND_ASSIGN(double eop, EqualityOfOpportunity(counts));
  EXPECT_NEAR(eo, 0.3, 1e-12);
  EXPECT_NEAR(eop, 0.3, 1e-12);
}

TEST(EqualizedOddsTest, PerfectClassifierIsZero) {
  ASSERT_OK_AND_ASSIGN(double eo,
                       EqualizedOdds(Table({10, 0, 0, 5, 7, 0, 0, 9})));
  EXPECT_EQ(eo, 0);
}

TEST(EqualizedOddsTest, ConstantTargetEqualsParity) {
  // Y = 1 everywhere: equalized odds reduces to the y=1 gap, which is the
  // parity gap.
  const JointCounts counts = Table({0, 0, 60, 40, 0, 0, 30, 70});
  ASSERT_OK_AND_ASSIGN(double eo, EqualizedOdds(counts));
  ASSERT_OK_AND_ASSIGN(double eop, EqualityOfOpportunity(counts));
  ASSERT_OK_AND_ASSIGN(double dp, DemographicParity(counts));
  EXPECT_NEAR(dp, 0.3, 1e-15);
  EXPECT_EQ(eo, dp);
  EXPECT_EQ(eop, dp);
}

TEST(EqualizedOddsTest, StratumEmptyInOneGroupIsNamed) {
  const auto eo = EqualizedOdds(Table({5, 5, 5, 5, 0, 0, 5, 5}));
  ASSERT_FALSE(eo.ok());
  EXPECT_THAT(std::string(eo.status().message()), HasSubstr("Y=0"));
}

TEST(EqualityOfOpportunityTest, TprGap) {
  JointCounts counts;
  Fill(counts, 0, 0, 0.5);
  Fill(counts, 1, 0, 0.5);
  Fill(counts, 0, 1, 0.8);
  Fill(counts, 1, 1, 0.6);
  ASSERT_OK_AND_ASSIGN(double eop, EqualityOfOpportunity(counts));
  EXPECT_NEAR(eop, 0.2, 1e-12);
  EXPECT_FALSE(EqualityOfOpportunity(Table({1, 1, 0, 0, 1, 1, 1, 1})).ok());
}

TEST(TotalVariationTest, Cases) {
  const std::vector<double> p = {0.25, 0.25, 0.5};
  ASSERT_OK_AND_ASSIGN(double same, TotalVariationDistance(p, p));
  EXPECT_EQ(same, 0);
  const std::vector<double> a = {1, 0}, b = {0, 1};
  ASSERT_OK_AND_ASSIGN(double disjoint, TotalVariationDistance(a, b));
  EXPECT_EQ(disjoint, 1);
  EXPECT_FALSE(TotalVariationDistance(a, p).ok());
}

TEST(FairnessReportTest, MatchesIndividualOpsAndRowOracle) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<int, 8> cells;
    for (int& c : cells) c = 1 + static_cast<int>(gen() % 40);
    const Dataset data = testing::DatasetFromCounts(cells);
    const JointCounts counts = CountJoint(data);
    ASSERT_OK_AND_ASSIGN(FairnessReport report,
                         MakeFairnessReport(counts, Estimator::kEmpirical));
    for (Metric m : kAllMetrics) {
      ASSERT_OK_AND_ASSIGN(double direct, ComputeMetric(m, counts));
      EXPECT_EQ(report.Get(m), direct);
    }
    const double dp = std::abs(RowRate(data, 1, -1) - RowRate(data, 0, -1));
    const double gap0 = std::abs(RowRate(data, 1, 0) - RowRate(data, 0, 0));
    const double gap1 = std::abs(RowRate(data, 1, 1) - RowRate(data, 0, 1));
    EXPECT_NEAR(*report.demographic_parity, dp, 1e-12);
    EXPECT_NEAR(*report.equalized_odds, std::max(gap0, gap1), 1e-12);
    EXPECT_NEAR(*report.equality_of_opportunity, gap1, 1e-12);
  }
}

TEST(FairnessReportTest, ZeroTotalIsError) {
  EXPECT_FALSE(MakeFairnessReport(JointCounts(), Estimator::kEmpirical).ok());
}

TEST(FairnessReportTest, NoGroundTruthOmitsLabelMetrics) {
  ReportOptions options;
  options.ground_truth_available = false;
  ASSERT_OK_AND_ASSIGN(FairnessReport report,
                       MakeFairnessReport(Table({1, 2, 3, 4, 5, 6, 7, 8}),
                                          Estimator::kEmpirical, options));
  EXPECT_TRUE(report.demographic_parity.has_value());
  EXPECT_FALSE(report.equalized_odds.has_value());
  EXPECT_FALSE(report.notes.empty());
}

TEST(FairnessReportTest, SerializeRoundTrip) {
  FairnessReport report;
  report.demographic_parity = 0.1234567890123456789;
  report.equality_of_opportunity = 1.0 / 3.0;
  report.estimator = Estimator::kGrrDebiased;
  report.n_effective = 5000;
  report.notes = {"first note", "second"};
  const std::string text = report.Serialize();
  EXPECT_THAT(text, HasSubstr("estimator=grr_debiased\n"));
  EXPECT_THAT(text, HasSubstr("equalized_odds=absent\n"));
  ASSERT_OK_AND_ASSIGN(FairnessReport back, FairnessReport::Parse(text));
  EXPECT_EQ(back, report);
}

// Random tables with every conditional defined.
JointCounts RandomTable(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> cell(0.0, 1000.0);
  JointCounts counts;
  for (double& c : counts.cells()) c = cell(gen);
  for (int a = 0; a < 2; ++a) {
    for (int y = 0; y < 2; ++y) {
      if (counts.at(a, y, 0) + counts.at(a, y, 1) == 0) counts.at(a, y, 0) = 1;
    }
  }
  return counts;
}

JointCounts SwapGroups(const JointCounts& counts) {
  JointCounts swapped;
  for (int a = 0; a < 2; ++a) {
    for (int y = 0; y < 2; ++y) {
      for (int yhat = 0; yhat < 2; ++yhat) {
        swapped.at(1 - a, y, yhat) = counts.at(a, y, yhat);
      }
    }
  }
  return swapped;
}

TEST(MetricPropertyTest, RandomTables) {
  std::mt19937_64 gen(20260101);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 2000; ++trial) {
    const JointCounts counts = RandomTable(gen);
    JointCounts scaled = counts;
    const double s = scale(gen);
    for (double& c : scaled.cells()) c *= s;
    const JointCounts swapped = SwapGroups(counts);
    for (Metric m : kAllMetrics) {
      ASSERT_OK_AND_ASSIGN(double v, ComputeMetric(m, counts));
      EXPECT_GE(v, 0);
      EXPECT_LE(v, 1);
      ASSERT_OK_AND_ASSIGN(double vs, ComputeMetric(m, scaled));
      EXPECT_NEAR(vs, v, 1e-12);
      ASSERT_OK_AND_ASSIGN(double vw, ComputeMetric(m, swapped));
      EXPECT_NEAR(vw, v, 1e-15);
    }
    ASSERT_OK_AND_ASSIGN(double eo, EqualizedOdds(counts));
    ASSERT_OK_AND_ASSIGN(double eop, EqualityOfOpportunity(counts));
    EXPECT_GE(eo, eop);
  }
}

TEST(MetricPropertyTest, RowOrderAndExtraColumnsDoNotMatter) {
  const Dataset data = testing::DatasetFromCounts({3, 1, 4, 1, 5, 9, 2, 6});
  std::vector<size_t> reversed(data.num_rows());
  for (size_t i = 0; i < reversed.size(); ++i) {
    reversed[i] = reversed.size() - 1 - i;
  }
  EXPECT_EQ(CountJoint(data), CountJoint(data.SelectRows(reversed)));
  std::vector<int32_t> zeros(data.num_rows(), 2);
  ASSERT_OK_AND_ASSIGN(Dataset rewritten, data.WithColumn(0, zeros));
  EXPECT_EQ(CountJoint(data), CountJoint(rewritten));
}

}  // namespace
}  // namespace fairaudit
