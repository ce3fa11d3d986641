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

#ifndef FAIRAUDIT_MODEL_NAIVE_BAYES_H_
#define FAIRAUDIT_MODEL_NAIVE_BAYES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/model/classifier.h"
#include "nlohmann/json.hpp"

namespace fairaudit {

struct NaiveBayesOptions {
  // Whether the protected attribute is a model input alongside the features.
  bool use_protected_attribute = true;
};

// Categorical Naive Bayes for the binary target, with add-one smoothing on
// the class prior and on every per-class conditional table. Scores are
// compared in log space; ties go to class 0.
class NaiveBayesModel : public Classifier {
 public:
  struct Input {
    std::string name;
    int cardinality = 0;
    // counts[y][v] = training rows with target y and input value v.
    std::array<std::vector<int64_t>, 2> counts;
    bool operator==(const Input&) const = default;
  };

  // Trained on the target column. If only one class occurs the model always
  // predicts it and `warnings` (when non-null) gets a note.
  static absl::StatusOr<NaiveBayesModel> Train(
      const Dataset& dataset, const NaiveBayesOptions& options = {},
      std::vector<std::string>* warnings = nullptr);

  absl::StatusOr<std::vector<size_t>> BindColumns(
      const Schema& schema) const override;
  int PredictInputs(std::span<const int32_t> inputs) const override;

  double Prior(int y) const;
  double Conditional(size_t input, int value, int y) const;
  // Unnormalized log posterior of each class.
  std::array<double, 2> LogScores(std::span<const int32_t> inputs) const;

  const std::vector<Input>& inputs() const { return inputs_; }
  const std::array<int64_t, 2>& class_counts() const { return class_counts_; }
  std::optional<int> constant_class() const { return constant_class_; }

  nlohmann::json ToJson() const;
  static absl::StatusOr<NaiveBayesModel> FromJson(const nlohmann::json& json);
  absl::Status Save(const std::string& path) const;
  static absl::StatusOr<NaiveBayesModel> Load(const std::string& path);

  bool operator==(const NaiveBayesModel& other) const {
    return class_counts_ == other.class_counts_ && inputs_ == other.inputs_;
  }

 private:
  NaiveBayesModel(std::array<int64_t, 2> class_counts,
                  std::vector<Input> inputs);

  std::array<int64_t, 2> class_counts_;
  std::vector<Input> inputs_;
  std::optional<int> constant_class_;
  std::array<double, 2> log_prior_{};
  // log_conditional_[y][offset_[i] + v]
  std::array<std::vector<double>, 2> log_conditional_;
  std::vector<size_t> offset_;
};

}  // namespace fairaudit

#endif  // FAIRAUDIT_MODEL_NAIVE_BAYES_H_
