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

#include "fairaudit/model/naive_bayes.h"

#include <cmath>
#include <fstream>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

NaiveBayesModel::NaiveBayesModel(std::array<int64_t, 2> class_counts,
                                 std::vector<Input> inputs)
    : class_counts_(class_counts), inputs_(std::move(inputs)) {
  const int64_t n = class_counts_[0] + class_counts_[1];
  if (class_counts_[0] == 0 || class_counts_[1] == 0) {
    constant_class_ = class_counts_[1] > 0 ? 1 : 0;
  }
  size_t width = 0;
  for (const Input& input : inputs_) {
    offset_.push_back(width);
    width += static_cast<size_t>(input.cardinality);
  }
  for (int y = 0; y < 2; ++y) {
    log_prior_[y] = std::log(static_cast<double>(class_counts_[y] + 1) /
                             static_cast<double>(n + 2));
    log_conditional_[y].resize(width);
    for (size_t i = 0; i < inputs_.size(); ++i) {
      const Input& input = inputs_[i];
      for (int v = 0; v < input.cardinality; ++v) {
        log_conditional_[y][offset_[i] + v] =
            std::log(static_cast<double>(input.counts[y][v] + 1) /
                     static_cast<double>(class_counts_[y] + input.cardinality));
      }
    }
  }
}

absl::StatusOr<NaiveBayesModel> NaiveBayesModel::Train(
    const Dataset& dataset, const NaiveBayesOptions& options,
    std::vector<std::string>* warnings) {
  if (dataset.num_rows() == 0) {
    return absl::InvalidArgumentError("cannot train on an empty dataset");
  }
  const Schema& schema = dataset.schema();
  std::vector<size_t> columns;
  for (size_t c = 0; c < schema.size(); ++c) {
    const Role role = schema.attribute(c).role;
    if (role == Role::kFeature ||
        (role == Role::kProtected && options.use_protected_attribute)) {
      columns.push_back(c);
    }
  }
  std::vector<Input> inputs;
  for (size_t c : columns) {
    const AttributeSpec& spec = schema.attribute(c);
    Input input{spec.name, spec.cardinality(), {}};
    input.counts[0].assign(spec.cardinality(), 0);
    input.counts[1].assign(spec.cardinality(), 0);
    inputs.push_back(std::move(input));
  }
  std::array<int64_t, 2> class_counts{0, 0};
  const size_t target = schema.target_index();
  for (size_t r = 0; r < dataset.num_rows(); ++r) {
    const auto row = dataset.row(r);
    const int y = row[target];
    ++class_counts[y];
    for (size_t i = 0; i < columns.size(); ++i) {
      ++inputs[i].counts[y][row[columns[i]]];
    }
  }
  NaiveBayesModel model(class_counts, std::move(inputs));
  if (model.constant_class_.has_value() && warnings != nullptr) {
    warnings->push_back(
        StrCat("training data has a single class; always predicting ",
               *model.constant_class_));
  }
  return model;
}

absl::StatusOr<std::vector<size_t>> NaiveBayesModel::BindColumns(
    const Schema& schema) const {
  std::vector<size_t> columns;
  for (const Input& input : inputs_) {
    const auto index = schema.IndexOf(input.name);
    if (!index.has_value()) {
      return absl::InvalidArgumentError(
          StrCat("model input ", input.name, " missing from dataset"));
    }
    if (schema.attribute(*index).cardinality() != input.cardinality) {
      return absl::InvalidArgumentError(StrCat(
          "model input ", input.name, " has cardinality ", input.cardinality,
          " but dataset column has ", schema.attribute(*index).cardinality()));
    }
    columns.push_back(*index);
  }
  return columns;
}

std::array<double, 2> NaiveBayesModel::LogScores(
    std::span<const int32_t> inputs) const {
  std::array<double, 2> scores = log_prior_;
  for (int y = 0; y < 2; ++y) {
    for (size_t i = 0; i < inputs.size(); ++i) {
      scores[y] += log_conditional_[y][offset_[i] + inputs[i]];
    }
  }
  return scores;
}

int NaiveBayesModel::PredictInputs(std::span<const int32_t> inputs) const {
  if (constant_class_.has_value()) return *constant_class_;
  const auto scores = LogScores(inputs);
  return scores[1] > scores[0] ? 1 : 0;
}

double NaiveBayesModel::Prior(int y) const { return std::exp(log_prior_[y]); }

double NaiveBayesModel::Conditional(size_t input, int value, int y) const {
  return std::exp(log_conditional_[y][offset_[input] + value]);
}

nlohmann::json NaiveBayesModel::ToJson() const {
  nlohmann::json inputs = nlohmann::json::array();
  for (const Input& input : inputs_) {
    inputs.push_back({{"name", input.name},
                      {"cardinality", input.cardinality},
                      {"counts_y0", input.counts[0]},
                      {"counts_y1", input.counts[1]}});
  }
  return {{"format", "fairaudit-naive-bayes-v1"},
          {"class_counts", class_counts_},
          {"inputs", std::move(inputs)}};
}

absl::StatusOr<NaiveBayesModel> NaiveBayesModel::FromJson(
    const nlohmann::json& json) {
  try {
    if (json.at("format") != "fairaudit-naive-bayes-v1") {
      return absl::InvalidArgumentError("unsupported model format");
    }
    const auto class_counts =
        json.at("class_counts").get<std::array<int64_t, 2>>();
    std::vector<Input> inputs;
    for (const nlohmann::json& entry : json.at("inputs")) {
      Input input;
      input.name = entry.at("name").get<std::string>();
      input.cardinality = entry.at("cardinality").get<int>();
      input.counts[0] = entry.at("counts_y0").get<std::vector<int64_t>>();
      input.counts[1] = entry.at("counts_y1").get<std::vector<int64_t>>();
      if (input.cardinality < 1 ||
          static_cast<int>(input.counts[0].size()) != input.cardinality ||
          static_cast<int>(input.counts[1].size()) != input.cardinality) {
        return absl::InvalidArgumentError(
            StrCat("inconsistent counts for input ", input.name));
      }
      inputs.push_back(std::move(input));
    }
    if (class_counts[0] < 0 || class_counts[1] < 0) {
      return absl::InvalidArgumentError("negative class counts");
    }
    return NaiveBayesModel(class_counts, std::move(inputs));
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(StrCat("malformed model: ", e.what()));
  }
}

absl::Status NaiveBayesModel::Save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(StrCat("cannot write ", path));
  out << ToJson().dump(2) << "\n";
  return out ? absl::OkStatus()
             : absl::DataLossError(StrCat("write failed: ", path));
}

absl::StatusOr<NaiveBayesModel> NaiveBayesModel::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  nlohmann::json json = nlohmann::json::parse(in, nullptr, false);
  if (json.is_discarded()) {
    return absl::InvalidArgumentError(StrCat(path, " is not valid JSON"));
  }
  return FromJson(json);
}

}  // namespace fairaudit
