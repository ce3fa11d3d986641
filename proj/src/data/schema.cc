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

#include "fairaudit/data/schema.h"

#include <fstream>
#include <set>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kFeature:
      return "feature";
    case Role::kProtected:
      return "protected";
    case Role::kTarget:
      return "target";
    case Role::kPrediction:
      return "prediction";
  }
  return "feature";
}

absl::StatusOr<Role> ParseRole(std::string_view name) {
  if (name == "feature") return Role::kFeature;
  if (name == "protected") return Role::kProtected;
  if (name == "target") return Role::kTarget;
  if (name == "prediction") return Role::kPrediction;
  return absl::InvalidArgumentError(StrCat("unknown role '", name, "'"));
}

std::optional<int> AttributeSpec::Encode(std::string_view label) const {
  for (size_t i = 0; i < value_labels.size(); ++i) {
    if (value_labels[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

Schema::Schema(std::vector<AttributeSpec> attributes)
    : attributes_(std::move(attributes)) {
  for (size_t i = 0; i < attributes_.size(); ++i) {
    switch (attributes_[i].role) {
      case Role::kProtected:
        protected_index_ = i;
        break;
      case Role::kTarget:
        target_index_ = i;
        break;
      case Role::kPrediction:
        prediction_index_ = i;
        break;
      case Role::kFeature:
        break;
    }
  }
}

absl::StatusOr<Schema> Schema::Create(std::vector<AttributeSpec> attributes) {
  std::set<std::string> names;
  int protected_count = 0, target_count = 0, prediction_count = 0;
  for (const AttributeSpec& spec : attributes) {
    if (spec.name.empty()) {
      return absl::InvalidArgumentError("attribute name must be nonempty");
    }
    if (!names.insert(spec.name).second) {
      return absl::InvalidArgumentError(
          StrCat("duplicate attribute name ", spec.name));
    }
    if (spec.cardinality() < 2) {
      return absl::InvalidArgumentError(StrCat("attribute ", spec.name,
                                               " needs at least 2 values, has ",
                                               spec.cardinality()));
    }
    if (std::set<std::string>(spec.value_labels.begin(),
                              spec.value_labels.end())
            .size() != spec.value_labels.size()) {
      return absl::InvalidArgumentError(
          StrCat("attribute ", spec.name, " has duplicate labels"));
    }
    if (spec.binning.has_value() &&
        spec.binning->bin_count() != spec.cardinality()) {
      return absl::InvalidArgumentError(
          StrCat("attribute ", spec.name, ": ", spec.binning->bin_count(),
                 " bins but ", spec.cardinality(), " labels"));
    }
    if (spec.role != Role::kFeature && spec.cardinality() != 2) {
      return absl::InvalidArgumentError(StrCat(
          RoleName(spec.role), " attribute ", spec.name, " must be binary"));
    }
    protected_count += spec.role == Role::kProtected;
    target_count += spec.role == Role::kTarget;
    prediction_count += spec.role == Role::kPrediction;
  }
  if (protected_count != 1 || target_count != 1 || prediction_count != 1) {
    return absl::InvalidArgumentError(
        "schema needs exactly one protected, one target and one prediction "
        "attribute");
  }
  return Schema(std::move(attributes));
}

std::optional<size_t> Schema::IndexOf(std::string_view name) const {
  for (size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<size_t> Schema::FeatureIndices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].role == Role::kFeature) out.push_back(i);
  }
  return out;
}

absl::StatusOr<Schema> SchemaFromJson(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("attributes") ||
      !json["attributes"].is_array()) {
    return absl::InvalidArgumentError(
        "schema must be an object with an \"attributes\" array");
  }
  std::vector<AttributeSpec> specs;
  try {
    for (const nlohmann::json& entry : json["attributes"]) {
      AttributeSpec spec;
      spec.name = entry.at("name").get<std::string>();
      ASSIGN_OR_RETURN(spec.role,
                       ParseRole(entry.value("role", std::string("feature"))));
      if (entry.contains("cuts")) {
        ASSIGN_OR_RETURN(
            BinningRule rule,
            BinningRule::Create(spec.name,
                                entry["cuts"].get<std::vector<double>>()));
        spec.binning = std::move(rule);
      }
      if (entry.contains("labels")) {
        spec.value_labels = entry["labels"].get<std::vector<std::string>>();
      } else if (spec.binning.has_value()) {
        spec.value_labels = spec.binning->DefaultLabels();
      } else {
        return absl::InvalidArgumentError(
            StrCat("attribute ", spec.name, " needs \"labels\" or \"cuts\""));
      }
      specs.push_back(std::move(spec));
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(StrCat("malformed schema: ", e.what()));
  }
  return Schema::Create(std::move(specs));
}

nlohmann::json SchemaToJson(const Schema& schema) {
  nlohmann::json attributes = nlohmann::json::array();
  for (const AttributeSpec& spec : schema.attributes()) {
    nlohmann::json entry;
    entry["name"] = spec.name;
    entry["role"] = std::string(RoleName(spec.role));
    entry["labels"] = spec.value_labels;
    if (spec.binning.has_value()) entry["cuts"] = spec.binning->cuts();
    attributes.push_back(std::move(entry));
  }
  return nlohmann::json{{"attributes", std::move(attributes)}};
}

absl::StatusOr<Schema> LoadSchema(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  nlohmann::json json = nlohmann::json::parse(in, nullptr, false);
  if (json.is_discarded()) {
    return absl::InvalidArgumentError(StrCat(path, " is not valid JSON"));
  }
  return SchemaFromJson(json);
}

absl::Status SaveSchema(const Schema& schema, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(StrCat("cannot write ", path));
  out << SchemaToJson(schema).dump(2) << "\n";
  return out ? absl::OkStatus()
             : absl::DataLossError(StrCat("write failed: ", path));
}

}  // namespace fairaudit
