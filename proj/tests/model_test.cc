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

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "fairaudit/model/classifier.h"
#include "fairaudit/model/naive_bayes.h"
#include "fairaudit/util/random.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairaudit {
namespace {

// y equals (f == hi); a is noise.
Dataset Separable(int rows) {
  std::vector<int32_t> codes;
  for (int i = 0; i < rows; ++i) {
    const int f = i % 3;
    codes.insert(codes.end(), {f, (i / 3) % 2, f == 2 ? 1 : 0, 0});
  }
  return *Dataset::Create(testing::SmallSchema(), std::move(codes));
}

TEST(NaiveBayesTest, SeparableDataIsFitPerfectly) {
  const Dataset data = Separable(300);
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model, NaiveBayesModel::Train(data));
  ASSERT_OK_AND_ASSIGN(Dataset labeled, Label(model, data));
  EXPECT_EQ(labeled.Column(3), data.Column(2));
}

TEST(NaiveBayesTest, BalancedLabelsGiveEvenPrior) {
  Rng rng(1);
  std::vector<int32_t> codes;
  for (int i = 0; i < 20000; ++i) {
    codes.insert(codes.end(), {UniformInt(rng, 3), UniformInt(rng, 2),
                               UniformInt(rng, 2), 0});
  }
  ASSERT_OK_AND_ASSIGN(
      NaiveBayesModel model,
      NaiveBayesModel::Train(*Dataset::Create(testing::SmallSchema(), codes)));
  EXPECT_NEAR(model.Prior(1), 0.5, 0.02);
}

TEST(NaiveBayesTest, TwoRowsGiveSmoothedModel) {
  const Dataset data =
      *Dataset::Create(testing::SmallSchema(), {0, 0, 0, 0, 2, 1, 1, 0});
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model, NaiveBayesModel::Train(data));
  // Add-one smoothing: (1 + 1) / (2 + 2).
  EXPECT_DOUBLE_EQ(model.Prior(1), 0.5);
  // Input 0 is f (3 values): (0 + 1) / (1 + 3) for an unseen value.
  EXPECT_DOUBLE_EQ(model.Conditional(0, 1, 0), 0.25);
}

TEST(NaiveBayesTest, HandComputedPosterior) {
  // Class 1 rows mostly (f=hi, a=1); class 0 rows mostly (f=lo, a=0).
  std::vector<int32_t> codes;
  auto add = [&](int f, int a, int y, int times) {
    for (int i = 0; i < times; ++i) codes.insert(codes.end(), {f, a, y, 0});
  };
  add(2, 1, 1, 6);
  add(0, 1, 1, 2);
  add(0, 0, 0, 7);
  add(2, 0, 0, 1);
  const Dataset data = *Dataset::Create(testing::SmallSchema(), codes);
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model, NaiveBayesModel::Train(data));
  // Hand posterior for (f=hi, a=1), inputs ordered f then a:
  //   class 1: (8+1)/18 * (6+1)/11 * (8+1)/10
  //   class 0: (8+1)/18 * (1+1)/11 * (0+1)/10
  const double s1 =
      std::log(9.0 / 18) + std::log(7.0 / 11) + std::log(9.0 / 10);
  const double s0 =
      std::log(9.0 / 18) + std::log(2.0 / 11) + std::log(1.0 / 10);
  const std::vector<int32_t> row = {2, 1};
  const auto scores = model.LogScores(row);
  EXPECT_NEAR(scores[1], s1, 1e-12);
  EXPECT_NEAR(scores[0], s0, 1e-12);
  EXPECT_EQ(model.PredictInputs(row), 1);
}

TEST(NaiveBayesTest, SingleClassPredictsItWithWarning) {
  const Dataset data =
      *Dataset::Create(testing::SmallSchema(), {0, 0, 1, 0, 2, 1, 1, 0});
  std::vector<std::string> warnings;
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model,
                       NaiveBayesModel::Train(data, {}, &warnings));
  EXPECT_FALSE(warnings.empty());
  ASSERT_OK_AND_ASSIGN(Dataset labeled, Label(model, data));
  EXPECT_THAT(labeled.Column(3), ::testing::Each(1));
}

TEST(NaiveBayesTest, EmptyAndRepeatedPrediction) {
  const Dataset data = Separable(30);
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model, NaiveBayesModel::Train(data));
  ASSERT_OK_AND_ASSIGN(Dataset empty,
                       Label(model, Dataset(testing::SmallSchema())));
  EXPECT_EQ(empty.num_rows(), 0u);
  ASSERT_OK_AND_ASSIGN(Dataset first, Label(model, data));
  ASSERT_OK_AND_ASSIGN(Dataset second, Label(model, data));
  EXPECT_EQ(first, second);
}

TEST(NaiveBayesTest, CardinalityMismatchIsError) {
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model,
                       NaiveBayesModel::Train(Separable(30)));
  const Schema other =
      *Schema::Create({{"f", Role::kFeature, {"lo", "hi"}, {}},
                       {"a", Role::kProtected, {"0", "1"}, {}},
                       {"y", Role::kTarget, {"0", "1"}, {}},
                       {"yhat", Role::kPrediction, {"0", "1"}, {}}});
  EXPECT_FALSE(model.BindColumns(other).ok());
}

TEST(NaiveBayesTest, ManyInputsDoNotUnderflow) {
  std::vector<AttributeSpec> specs;
  for (int i = 0; i < 64; ++i) {
    std::vector<std::string> labels;
    for (int v = 0; v < 256; ++v) labels.push_back(std::to_string(v));
    specs.push_back({"f" + std::to_string(i), Role::kFeature, labels, {}});
  }
  specs.push_back({"a", Role::kProtected, {"0", "1"}, {}});
  specs.push_back({"y", Role::kTarget, {"0", "1"}, {}});
  specs.push_back({"yhat", Role::kPrediction, {"0", "1"}, {}});
  const Schema schema = *Schema::Create(specs);
  Rng rng(2);
  std::vector<int32_t> codes;
  for (int r = 0; r < 200; ++r) {
    for (int i = 0; i < 64; ++i) codes.push_back(UniformInt(rng, 256));
    codes.insert(codes.end(), {UniformInt(rng, 2), UniformInt(rng, 2), 0});
  }
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model,
                       NaiveBayesModel::Train(*Dataset::Create(schema, codes)));
  const std::vector<int32_t> row(65, 0);
  for (double s : model.LogScores(row)) {
    EXPECT_TRUE(std::isfinite(s));
  }
}

TEST(NaiveBayesTest, SaveLoadRoundTrip) {
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel model,
                       NaiveBayesModel::Train(Separable(30)));
  const std::string path =
      (std::filesystem::temp_directory_path() / "fa_model_test.json").string();
  ASSERT_OK(model.Save(path));
  ASSERT_OK_AND_ASSIGN(NaiveBayesModel back, NaiveBayesModel::Load(path));
  EXPECT_EQ(back, model);
}

}  // namespace
}  // namespace fairaudit
