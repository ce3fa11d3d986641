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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "fairaudit/data/binning.h"
#include "fairaudit/data/csv_io.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/data/schema.h"
#include "fairaudit/data/split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fairaudit {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

constexpr char kSmallCsv[] =
    "f,a,y,yhat\n"
    "lo,0,1,1\n"
    "hi,1,0,0\n"
    "mid,1,1,0\n";

// Linear-interpolation quantile of a sorted sample, computed independently
// of the library.
double QuantileOracle(const std::vector<double>& sorted, double q) {
  const double h = (sorted.size() - 1) * q;
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

TEST(SchemaTest, RejectsMissingRoles) {
  EXPECT_FALSE(Schema::Create({{"f", Role::kFeature, {"x", "y"}, {}},
                               {"a", Role::kProtected, {"0", "1"}, {}}})
                   .ok());
}

TEST(SchemaTest, RejectsNonBinaryProtected) {
  EXPECT_FALSE(Schema::Create({{"a", Role::kProtected, {"0", "1", "2"}, {}},
                               {"y", Role::kTarget, {"0", "1"}, {}},
                               {"yhat", Role::kPrediction, {"0", "1"}, {}}})
                   .ok());
}

TEST(SchemaTest, JsonRoundTrip) {
  ASSERT_OK_AND_ASSIGN(BinningRule rule, BinningRule::Create("age", {30, 50}));
  ASSERT_OK_AND_ASSIGN(
      Schema schema,
      Schema::Create({{"age", Role::kFeature, rule.DefaultLabels(), rule},
                      {"a", Role::kProtected, {"m", "f"}, {}},
                      {"y", Role::kTarget, {"0", "1"}, {}},
                      {"yhat", Role::kPrediction, {"0", "1"}, {}}}));
  ASSERT_OK_AND_ASSIGN(Schema back, SchemaFromJson(SchemaToJson(schema)));
  EXPECT_EQ(back, schema);
  EXPECT_EQ(back.protected_index(), 1u);
  EXPECT_THAT(back.FeatureIndices(), ElementsAre(0u));
}

TEST(CsvTest, EncodesThreeRows) {
  ASSERT_OK_AND_ASSIGN(Dataset data,
                       EncodeCsv(kSmallCsv, testing::SmallSchema()));
  EXPECT_EQ(data.num_rows(), 3u);
  EXPECT_THAT(data.Column(0), ElementsAre(0, 2, 1));
  EXPECT_THAT(data.Column(3), ElementsAre(1, 0, 0));
}

TEST(CsvTest, UnknownValueNamesRowAndColumn) {
  const Schema schema =
      *Schema::Create({{"age_bin", Role::kFeature, {"young", "old"}, {}},
                       {"sex", Role::kProtected, {"male", "female"}, {}},
                       {"Y", Role::kTarget, {"0", "1"}, {}},
                       {"Yhat", Role::kPrediction, {"0", "1"}, {}}});
  const auto result =
      EncodeCsv("age_bin,sex,Y,Yhat\nyoung,male,0,0\nold,purple,1,1\n", schema);
  ASSERT_FALSE(result.ok());
  EXPECT_THAT(std::string(result.status().message()),
              HasSubstr("unknown value at row 2, column sex"));
}

TEST(CsvTest, MissingColumnIsError) {
  EXPECT_FALSE(EncodeCsv("f,a,yhat\nlo,0,1\n", testing::SmallSchema()).ok());
}

TEST(CsvTest, MissingCellIsError) {
  const auto result =
      EncodeCsv("f,a,y,yhat\nlo,,1,1\n", testing::SmallSchema());
  ASSERT_FALSE(result.ok());
  EXPECT_THAT(std::string(result.status().message()),
              HasSubstr("missing value"));
}

TEST(CsvTest, EmptyFileGivesEmptyDataset) {
  ASSERT_OK_AND_ASSIGN(Dataset data, EncodeCsv("", testing::SmallSchema()));
  EXPECT_EQ(data.num_rows(), 0u);
}

TEST(CsvTest, NumericColumnIsBinned) {
  ASSERT_OK_AND_ASSIGN(BinningRule rule, BinningRule::Create("age", {30, 50}));
  ASSERT_OK_AND_ASSIGN(
      Schema schema,
      Schema::Create({{"age", Role::kFeature, rule.DefaultLabels(), rule},
                      {"a", Role::kProtected, {"0", "1"}, {}},
                      {"y", Role::kTarget, {"0", "1"}, {}},
                      {"yhat", Role::kPrediction, {"0", "1"}, {}}}));
  ASSERT_OK_AND_ASSIGN(
      Dataset data,
      EncodeCsv("age,a,y,yhat\n25,0,0,0\n42,1,1,0\n61,0,1,1\n", schema));
  EXPECT_THAT(data.Column(0), ElementsAre(0, 1, 2));
}

TEST(CsvTest, QuotedFieldsAndCrlf) {
  ASSERT_OK_AND_ASSIGN(auto records,
                       ParseCsv("x,\"a,b\"\r\n\"he said \"\"hi\"\"\",z\r\n"));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_THAT(records[0], ElementsAre("x", "a,b"));
  EXPECT_THAT(records[1], ElementsAre("he said \"hi\"", "z"));
  EXPECT_EQ(EscapeCsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(EscapeCsvField("plain"), "plain");
}

TEST(CsvTest, WriteThenReadRoundTrips) {
  ASSERT_OK_AND_ASSIGN(Dataset data,
                       EncodeCsv(kSmallCsv, testing::SmallSchema()));
  std::ostringstream out;
  WriteCsv(data, out);
  EXPECT_EQ(out.str(), kSmallCsv);
  ASSERT_OK_AND_ASSIGN(Dataset back,
                       EncodeCsv(out.str(), testing::SmallSchema()));
  EXPECT_EQ(back, data);
}

TEST(CsvTest, IngestFromFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "fa_data_test";
  std::filesystem::create_directories(dir);
  const std::string csv = (dir / "d.csv").string();
  const std::string schema = (dir / "s.json").string();
  std::ofstream(csv) << kSmallCsv;
  ASSERT_OK(SaveSchema(testing::SmallSchema(), schema));
  ASSERT_OK_AND_ASSIGN(Dataset data, IngestCsv(csv, schema));
  EXPECT_EQ(data.num_rows(), 3u);
  EXPECT_FALSE(IngestCsv((dir / "absent.csv").string(), schema).ok());
}

TEST(BinningTest, HalfOpenIntervals) {
  ASSERT_OK_AND_ASSIGN(BinningRule rule, BinningRule::Create("x", {30, 50}));
  EXPECT_EQ(rule.Bin(30), 0);
  EXPECT_EQ(rule.Bin(30.0001), 1);
  EXPECT_EQ(rule.Bin(50), 1);
  EXPECT_EQ(rule.Bin(1e9), 2);
  EXPECT_FALSE(BinningRule::Create("x", {2, 1}).ok());
}

TEST(BinningTest, QuantileCutsMatchOracle) {
  std::vector<double> values(100);
  std::iota(values.begin(), values.end(), 1.0);
  ASSERT_OK_AND_ASSIGN(DiscretizeResult result, Discretize("v", values, 4));
  ASSERT_EQ(result.rule.cuts().size(), 3u);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_NEAR(result.rule.cuts()[i - 1], QuantileOracle(values, i / 4.0),
                1e-12);
  }
  EXPECT_NEAR(result.rule.cuts()[0], 25.75, 1e-12);
  EXPECT_NEAR(result.rule.cuts()[1], 50.5, 1e-12);
  EXPECT_NEAR(result.rule.cuts()[2], 75.25, 1e-12);
}

TEST(BinningTest, ConstantColumnGivesOneBinAndWarning) {
  const std::vector<double> values(10, 3.0);
  ASSERT_OK_AND_ASSIGN(DiscretizeResult result, Discretize("v", values, 4));
  EXPECT_EQ(result.rule.bin_count(), 1);
  EXPECT_FALSE(result.warnings.empty());
}

TEST(BinningTest, TwoValuesGetOneCutBetweenThem) {
  const std::vector<double> values = {1, 1, 1, 7, 7, 7};
  ASSERT_OK_AND_ASSIGN(DiscretizeResult result, Discretize("v", values, 2));
  ASSERT_EQ(result.rule.cuts().size(), 1u);
  EXPECT_EQ(result.rule.Bin(1), 0);
  EXPECT_EQ(result.rule.Bin(7), 1);
}

Dataset Numbered(int n) {
  std::vector<int32_t> codes;
  for (int i = 0; i < n; ++i) codes.insert(codes.end(), {i % 3, i % 2, 0, 1});
  return *Dataset::Create(testing::SmallSchema(), std::move(codes));
}

TEST(SplitTest, SizesFollowFraction) {
  ASSERT_OK_AND_ASSIGN(TrainTestSplit small, Split(Numbered(10), 0.8, 0));
  EXPECT_EQ(small.train.num_rows(), 8u);
  EXPECT_EQ(small.test.num_rows(), 2u);
  ASSERT_OK_AND_ASSIGN(TrainTestSplit big, Split(Numbered(100000), 0.8, 0));
  EXPECT_EQ(big.train.num_rows(), 80000u);
  EXPECT_EQ(big.test.num_rows(), 20000u);
}

TEST(SplitTest, DeterministicAndAPartition) {
  const Dataset data = Numbered(60);
  ASSERT_OK_AND_ASSIGN(TrainTestSplit a, Split(data, 0.7, 42));
  ASSERT_OK_AND_ASSIGN(TrainTestSplit b, Split(data, 0.7, 42));
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);

  auto rows_of = [](const Dataset& d) {
    std::vector<std::vector<int32_t>> rows;
    for (size_t i = 0; i < d.num_rows(); ++i) {
      rows.emplace_back(d.row(i).begin(), d.row(i).end());
    }
    return rows;
  };
  auto all = rows_of(a.train);
  const auto test_rows = rows_of(a.test);
  all.insert(all.end(), test_rows.begin(), test_rows.end());
  auto expected = rows_of(data);
  std::sort(all.begin(), all.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(all, expected);
}

TEST(SplitTest, RejectsDegenerateFraction) {
  EXPECT_FALSE(Split(Numbered(10), 0.0, 0).ok());
  EXPECT_FALSE(Split(Numbered(10), 1.0, 0).ok());
}

TEST(DatasetTest, RejectsOutOfRangeCodes) {
  EXPECT_FALSE(Dataset::Create(testing::SmallSchema(), {3, 0, 0, 0}).ok());
  EXPECT_FALSE(Dataset::Create(testing::SmallSchema(), {0, 0, 0}).ok());
}

}  // namespace
}  // namespace fairaudit
