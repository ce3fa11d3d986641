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

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fairaudit/mechanisms/budget_ledger.h"
#include "fairaudit/mechanisms/debias.h"
#include "fairaudit/mechanisms/grr.h"
#include "fairaudit/mechanisms/marginal.h"
#include "fairaudit/metrics/joint_counts.h"
#include "fairaudit/util/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairaudit {
namespace {

using ::testing::ElementsAre;

TEST(GrrTest, RetentionProbability) {
  ASSERT_OK_AND_ASSIGN(double p, GrrRetentionProbability(std::log(3.0), 2));
  EXPECT_NEAR(p, 0.75, 1e-15);
  const long double e10 = std::exp(10.0L);
  ASSERT_OK_AND_ASSIGN(double p10, GrrRetentionProbability(10, 2));
  EXPECT_NEAR(p10, static_cast<double>(e10 / (e10 + 1)), 1e-15);
  EXPECT_NEAR(p10, 0.9999546021, 1e-10);
  ASSERT_OK_AND_ASSIGN(double tiny, GrrRetentionProbability(1e-9, 4));
  EXPECT_NEAR(tiny, 0.25, 1e-9);
  EXPECT_FALSE(GrrRetentionProbability(0, 2).ok());
  EXPECT_FALSE(GrrRetentionProbability(-1, 2).ok());
  EXPECT_FALSE(GrrRetentionProbability(1, 1).ok());
}

TEST(GrrTest, ChannelRowsAreStochasticAndRatioIsExact) {
  for (auto [eps, k] : {std::pair{0.5, 2}, {1.0, 4}, {10.0, 8}, {3.0, 5}}) {
    ASSERT_OK_AND_ASSIGN(GrrChannel channel, GrrChannel::Create(eps, k));
    const std::vector<double> m = channel.Matrix();
    for (int i = 0; i < k; ++i) {
      double row = 0;
      for (int j = 0; j < k; ++j) row += m[i * k + j];
      EXPECT_NEAR(row, 1, 1e-15);
    }
    EXPECT_NEAR(channel.MaxLikelihoodRatio(), std::exp(eps),
                1e-9 * std::exp(eps));
  }
}

TEST(GrrTest, InverseMatrixIsInverse) {
  ASSERT_OK_AND_ASSIGN(GrrChannel channel, GrrChannel::Create(1.3, 5));
  ASSERT_OK_AND_ASSIGN(std::vector<double> inv, channel.InverseMatrix());
  const std::vector<double> m = channel.Matrix();
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      double v = 0;
      for (int l = 0; l < 5; ++l) v += m[i * 5 + l] * inv[l * 5 + j];
      EXPECT_NEAR(v, i == j ? 1 : 0, 1e-12);
    }
  }
}

TEST(GrrTest, EmpiricalLikelihoodRatio) {
  const double eps = 1.0;
  ASSERT_OK_AND_ASSIGN(GrrChannel channel, GrrChannel::Create(eps, 2));
  Rng rng(99);
  const int trials = 1000000;
  int zero_from_zero = 0, zero_from_one = 0;
  for (int i = 0; i < trials; ++i) {
    zero_from_zero += channel.Apply(0, rng) == 0;
    zero_from_one += channel.Apply(1, rng) == 0;
  }
  const double ratio = static_cast<double>(zero_from_zero) / zero_from_one;
  EXPECT_GE(ratio, std::exp(eps) * 0.95);
  EXPECT_LE(ratio, std::exp(eps) * 1.05);
}

Dataset Constant(int rows, int32_t f, int32_t a, int32_t y, int32_t yhat) {
  std::vector<int32_t> codes;
  for (int i = 0; i < rows; ++i) codes.insert(codes.end(), {f, a, y, yhat});
  return *Dataset::Create(testing::SmallSchema(), std::move(codes));
}

TEST(GrrPerturbTest, RetentionMatchesClosedForm) {
  const Dataset data = Constant(100000, 0, 1, 1, 1);
  const std::vector<std::string> cols = {"a"};
  ASSERT_OK_AND_ASSIGN(GrrResult result,
                       GrrPerturb(data, std::log(3.0), cols, 5));
  const std::vector<int32_t> a = result.dataset.Column(1);
  const double kept = std::count(a.begin(), a.end(), 1) / 100000.0;
  EXPECT_NEAR(kept, 0.75, 0.01);
  // Untouched columns stay put.
  EXPECT_EQ(result.dataset.Column(2), data.Column(2));
}

TEST(GrrPerturbTest, HugeEpsilonKeepsEverything) {
  const Dataset data = Constant(250, 2, 0, 1, 0);
  ASSERT_OK_AND_ASSIGN(GrrResult result, GrrPerturb(data, 50, {}, 1));
  EXPECT_EQ(result.dataset, data);
}

TEST(GrrPerturbTest, LedgerComposesSequentially) {
  const Dataset data = Constant(10, 1, 0, 1, 0);
  const std::vector<std::string> cols = {"f", "a", "y"};
  ASSERT_OK_AND_ASSIGN(GrrResult result, GrrPerturb(data, 1.0, cols, 3));
  EXPECT_EQ(result.ledger.entries().size(), 3u);
  EXPECT_EQ(result.ledger.total(), 3.0);
  ASSERT_EQ(result.columns.size(), 3u);
  EXPECT_EQ(result.columns[0].k, 3);
  EXPECT_EQ(result.columns[1].attribute, "a");
}

TEST(GrrPerturbTest, DeterministicPerSeed) {
  const Dataset data = Constant(500, 1, 0, 1, 0);
  ASSERT_OK_AND_ASSIGN(GrrResult a, GrrPerturb(data, 1.0, {}, 8));
  ASSERT_OK_AND_ASSIGN(GrrResult b, GrrPerturb(data, 1.0, {}, 8));
  ASSERT_OK_AND_ASSIGN(GrrResult c, GrrPerturb(data, 1.0, {}, 9));
  EXPECT_EQ(a.dataset, b.dataset);
  EXPECT_NE(a.dataset, c.dataset);
}

TEST(GrrPerturbTest, UnknownColumnIsError) {
  const std::vector<std::string> cols = {"nope"};
  EXPECT_FALSE(GrrPerturb(Constant(3, 0, 0, 0, 0), 1.0, cols, 1).ok());
}

TEST(EpsilonModeTest, Split) {
  EXPECT_EQ(PerColumnEpsilon(2.0, EpsilonMode::kPerColumn, 4), 2.0);
  EXPECT_EQ(PerColumnEpsilon(2.0, EpsilonMode::kTotalSplit, 4), 0.5);
  ASSERT_OK_AND_ASSIGN(EpsilonMode mode, ParseEpsilonMode("total-split"));
  EXPECT_EQ(mode, EpsilonMode::kTotalSplit);
}

Eigen::Matrix2d Channel2(const GrrChannel& c) {
  Eigen::Matrix2d m;
  m << c.Transition(0, 0), c.Transition(0, 1), c.Transition(1, 0),
      c.Transition(1, 1);
  return m;
}

Eigen::MatrixXd Kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// out[j] = sum_i T(i -> j) v[i] with the (a, y, yhat) index order.
Eigen::MatrixXd FullChannel(const JointChannels& ch) {
  return Kron(Channel2(ch.protected_attr),
              Kron(Channel2(ch.target), Channel2(ch.prediction)))
      .transpose();
}

TEST(DebiasTest, MatchesDenseLinearAlgebraOracle) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> eps(0.5, 10.0), cell(0, 5000);
  for (int trial = 0; trial < 100; ++trial) {
    const JointChannels channels{*GrrChannel::Create(eps(gen), 2),
                                 *GrrChannel::Create(eps(gen), 2),
                                 *GrrChannel::Create(eps(gen), 2)};
    JointCounts truth;
    Eigen::VectorXd v(8);
    for (int i = 0; i < 8; ++i) v(i) = truth.cells()[i] = cell(gen);
    const Eigen::MatrixXd k = FullChannel(channels);
    const Eigen::VectorXd pushed = k * v;
    const JointCounts expected = ExpectedPerturbedCounts(truth, channels);
    for (int i = 0; i < 8; ++i) {
      EXPECT_NEAR(expected.cells()[i], pushed(i), 1e-9 * (1 + pushed(i)));
    }
    const Eigen::VectorXd solved = k.fullPivLu().solve(pushed);
    ASSERT_OK_AND_ASSIGN(JointCounts inverted,
                         InvertJointChannel(expected, channels));
    for (int i = 0; i < 8; ++i) {
      EXPECT_NEAR(inverted.cells()[i], truth.cells()[i], 1e-9);
      EXPECT_NEAR(inverted.cells()[i], solved(i), 1e-9);
    }
  }
}

TEST(DebiasTest, IdentityChannelsLeaveCountsUnchanged) {
  const JointChannels identity{GrrChannel::Identity(2), GrrChannel::Identity(2),
                               GrrChannel::Identity(2)};
  const JointCounts counts({1, 2, 3, 4, 5, 6, 7, 8});
  ASSERT_OK_AND_ASSIGN(DebiasResult result, DebiasGrrCounts(counts, identity));
  EXPECT_EQ(result.counts, counts);
  EXPECT_TRUE(result.warnings.empty());
}

TEST(DebiasTest, ClampsNegativesAndKeepsTotal) {
  const JointChannels channels{*GrrChannel::Create(0.5, 2),
                               *GrrChannel::Create(0.5, 2),
                               *GrrChannel::Create(0.5, 2)};
  // Far from any expected perturbed table: the inverse goes negative.
  const JointCounts observed({100, 0, 0, 0, 0, 0, 0, 0});
  ASSERT_OK_AND_ASSIGN(DebiasResult result,
                       DebiasGrrCounts(observed, channels));
  for (double c : result.counts.cells()) EXPECT_GE(c, 0);
  EXPECT_NEAR(result.counts.total(), 100, 1e-9);
  EXPECT_FALSE(result.warnings.empty());
  EXPECT_FALSE(DebiasGrrCounts(JointCounts(), channels).ok());
}

TEST(BudgetLedgerTest, SequentialCompositionIsExact) {
  BudgetLedger ledger;
  for (int i = 0; i < 10; ++i) ledger.Record("grr:c", 0.1);
  EXPECT_EQ(ledger.total(), 1.0);
  ledger.Record("free", kNoPrivacy);
  EXPECT_TRUE(std::isinf(ledger.total()));
}

TEST(BudgetLedgerTest, JsonRoundTripKeepsInfinity) {
  BudgetLedger ledger;
  ledger.Record("a", 0.25);
  ledger.Record("b", kNoPrivacy);
  ASSERT_OK_AND_ASSIGN(BudgetLedger back,
                       BudgetLedger::FromJson(ledger.ToJson()));
  EXPECT_EQ(back, ledger);
}

TEST(MarginalTest, NoNoiseIsExact) {
  const Dataset data = testing::DatasetFromCounts({1, 2, 3, 4, 5, 6, 7, 8});
  const std::vector<std::string> attrs = {"a", "yhat"};
  ASSERT_OK_AND_ASSIGN(NoisyMarginal m,
                       MeasureMarginal(data, attrs, kNoPrivacy, 1));
  EXPECT_EQ(m.noise, NoiseKind::kNone);
  EXPECT_THAT(m.counts, ElementsAre(4, 6, 12, 14));
}

TEST(MarginalTest, ShapeFollowsCardinalities) {
  const Schema schema =
      *Schema::Create({{"q", Role::kFeature, {"a", "b", "c", "d"}, {}},
                       {"s", Role::kProtected, {"0", "1"}, {}},
                       {"y", Role::kTarget, {"0", "1"}, {}},
                       {"yhat", Role::kPrediction, {"0", "1"}, {}}});
  const std::vector<std::string> attrs = {"q", "s"};
  BudgetLedger ledger;
  ASSERT_OK_AND_ASSIGN(NoisyMarginal m, MeasureMarginal(Dataset(schema), attrs,
                                                        1.0, 2, &ledger));
  EXPECT_THAT(m.shape, ElementsAre(4, 2));
  EXPECT_EQ(m.counts.size(), 8u);
  EXPECT_EQ(ledger.total(), 1.0);
  const std::vector<std::string> bad = {"zzz"};
  EXPECT_FALSE(MeasureMarginal(Dataset(schema), bad, 1.0, 2).ok());
}

TEST(MarginalTest, LaplaceVarianceIsTwoAtUnitEpsilon) {
  const Dataset empty(testing::SmallSchema());
  const std::vector<std::string> attrs = {"a"};
  double sum_sq = 0;
  int cells = 0;
  for (uint64_t seed = 0; seed < 100000; ++seed) {
    ASSERT_OK_AND_ASSIGN(NoisyMarginal m,
                         MeasureMarginal(empty, attrs, 1.0, seed));
    for (double c : m.counts) {
      sum_sq += c * c;
      ++cells;
    }
  }
  EXPECT_NEAR(sum_sq / cells, 2.0, 0.05);
}

TEST(ProjectTest, HandArithmetic) {
  const std::vector<double> table = {5, -1, 2};
  const ProjectedTable p = ProjectNonnegative(table, 6);
  ASSERT_EQ(p.values.size(), 3u);
  EXPECT_NEAR(p.values[0], 30.0 / 7, 1e-12);
  EXPECT_EQ(p.values[1], 0);
  EXPECT_NEAR(p.values[2], 12.0 / 7, 1e-12);
}

TEST(ProjectTest, NonnegativeIsOnlyRescaled) {
  const std::vector<double> table = {1, 3};
  const ProjectedTable p = ProjectNonnegative(table, 8);
  EXPECT_THAT(p.values, ElementsAre(2, 6));
  EXPECT_TRUE(p.warnings.empty());
}

TEST(ProjectTest, AllNegativeFallsBackToUniform) {
  const std::vector<double> table = {-1, -2, -3, -4};
  const ProjectedTable p = ProjectNonnegative(table, 8);
  EXPECT_THAT(p.values, ElementsAre(2, 2, 2, 2));
  EXPECT_FALSE(p.warnings.empty());
}

}  // namespace
}  // namespace fairaudit
