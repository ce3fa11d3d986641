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

#ifndef FAIRAUDIT_DATA_SCHEMA_H_
#define FAIRAUDIT_DATA_SCHEMA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/binning.h"
#include "nlohmann/json.hpp"

namespace fairaudit {

enum class Role { kFeature, kProtected, kTarget, kPrediction };

std::string_view RoleName(Role role);
absl::StatusOr<Role> ParseRole(std::string_view name);

// One categorical column. Codes are dense integers 0..k-1 indexing
// `value_labels`. A column with a binning rule is read as a real number and
// mapped through the rule; its labels name the bins.
struct AttributeSpec {
  std::string name;
  Role role = Role::kFeature;
  std::vector<std::string> value_labels;
  std::optional<BinningRule> binning;

  int cardinality() const { return static_cast<int>(value_labels.size()); }
  std::optional<int> Encode(std::string_view label) const;

  bool operator==(const AttributeSpec&) const = default;
};

// Ordered attribute list with exactly one protected, one target and one
// prediction attribute, each binary (code 1 = protected group / positive).
class Schema {
 public:
  static absl::StatusOr<Schema> Create(std::vector<AttributeSpec> attributes);

  const std::vector<AttributeSpec>& attributes() const { return attributes_; }
  size_t size() const { return attributes_.size(); }
  const AttributeSpec& attribute(size_t i) const { return attributes_[i]; }
  std::optional<size_t> IndexOf(std::string_view name) const;

  size_t protected_index() const { return protected_index_; }
  size_t target_index() const { return target_index_; }
  size_t prediction_index() const { return prediction_index_; }

  // Attributes with role kFeature, in schema order.
  std::vector<size_t> FeatureIndices() const;

  bool operator==(const Schema& other) const {
    return attributes_ == other.attributes_;
  }

 private:
  explicit Schema(std::vector<AttributeSpec> attributes);

  std::vector<AttributeSpec> attributes_;
  size_t protected_index_ = 0;
  size_t target_index_ = 0;
  size_t prediction_index_ = 0;
};

// JSON sidecar:
//   {"attributes": [
//     {"name": "sex", "role": "protected", "labels": ["male", "female"]},
//     {"name": "age", "role": "feature", "cuts": [30, 50]}, ...]}
// Binned attributes may omit "labels"; interval labels are generated.
absl::StatusOr<Schema> SchemaFromJson(const nlohmann::json& json);
nlohmann::json SchemaToJson(const Schema& schema);
absl::StatusOr<Schema> LoadSchema(const std::string& path);
absl::Status SaveSchema(const Schema& schema, const std::string& path);

}  // namespace fairaudit

#endif  // FAIRAUDIT_DATA_SCHEMA_H_
