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

#include "fairaudit/synth/generative_model.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

nlohmann::json MarginalToJson(const NoisyMarginal& m) {
  return {{"attributes", m.attributes},
          {"shape", m.shape},
          {"counts", m.counts},
          {"epsilon", std::isinf(m.epsilon) ? nlohmann::json("inf")
                                            : nlohmann::json(m.epsilon)},
          {"noise", std::string(NoiseKindName(m.noise))}};
}

NoisyMarginal MarginalFromJson(const nlohmann::json& json) {
  NoisyMarginal m;
  m.attributes = json.at("attributes").get<std::vector<std::string>>();
  m.shape = json.at("shape").get<std::vector<int>>();
  m.counts = json.at("counts").get<std::vector<double>>();
  const nlohmann::json& eps = json.at("epsilon");
  m.epsilon = eps.is_string() ? kNoPrivacy : eps.get<double>();
  m.noise = json.at("noise").get<std::string>() == "laplace"
                ? NoiseKind::kLaplace
                : NoiseKind::kNone;
  return m;
}

}  // namespace

nlohmann::json GenerativeModel::ToJson() const {
  return {{"format", "fairaudit-generative-model-v1"},
          {"schema", SchemaToJson(schema)},
          {"joint", joint},
          {"feature_distributions", feature_distributions},
          {"n_source", n_source},
          {"plan", plan.ToJson()},
          {"measurements", [this] {
             nlohmann::json all = nlohmann::json::array();
             for (const NoisyMarginal& m : measurements) {
               all.push_back(MarginalToJson(m));
             }
             return all;
           }()}};
}

absl::StatusOr<GenerativeModel> GenerativeModel::FromJson(
    const nlohmann::json& json) {
  try {
    if (json.at("format") != "fairaudit-generative-model-v1") {
      return absl::InvalidArgumentError("unsupported generative model format");
    }
    ASSIGN_OR_RETURN(Schema schema, SchemaFromJson(json.at("schema")));
    ASSIGN_OR_RETURN(MarginalPlan plan,
                     MarginalPlan::FromJson(json.at("plan")));
    GenerativeModel model{std::move(schema), {}, {}, 0, std::move(plan), {}};
    const auto joint = json.at("joint").get<std::vector<double>>();
    if (joint.size() != model.joint.size()) {
      return absl::InvalidArgumentError("joint table must have 8 cells");
    }
    std::copy(joint.begin(), joint.end(), model.joint.begin());
    model.feature_distributions = json.at("feature_distributions")
                                      .get<std::vector<std::vector<double>>>();
    if (model.feature_distributions.size() != model.schema.size()) {
      return absl::InvalidArgumentError(
          "one feature distribution per column expected");
    }
    for (size_t c : model.schema.FeatureIndices()) {
      if (static_cast<int>(model.feature_distributions[c].size()) !=
          model.schema.attribute(c).cardinality()) {
        return absl::InvalidArgumentError(StrCat("distribution for ",
                                                 model.schema.attribute(c).name,
                                                 " has the wrong size"));
      }
    }
    model.n_source = json.at("n_source").get<int64_t>();
    for (const nlohmann::json& m : json.at("measurements")) {
      model.measurements.push_back(MarginalFromJson(m));
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        StrCat("malformed generative model: ", e.what()));
  }
}

absl::StatusOr<FitResult> FitGenerativeModel(const Dataset& dataset,
                                             const MarginalPlan& plan,
                                             double epsilon, uint64_t seed) {
  if (!(epsilon > 0)) {
    return absl::InvalidArgumentError(
        StrCat("epsilon must be positive, got ", epsilon));
  }
  const Schema& schema = dataset.schema();
  FitResult result{GenerativeModel{schema, {}, {}, 0, plan, {}}, {}, {}};
  GenerativeModel& model = result.model;
  model.n_source = static_cast<int64_t>(dataset.num_rows());
  model.feature_distributions.assign(schema.size(), {});

  const auto marginals = plan.Marginals();
  const auto fractions = plan.BudgetFractions();
  // Running sums of projected one-way distributions, and how many tables
  // contributed to each.
  std::vector<std::vector<double>> sums(schema.size());
  std::vector<int> contributions(schema.size(), 0);
  bool have_joint = false;

  for (size_t i = 0; i < marginals.size(); ++i) {
    const double share =
        std::isinf(epsilon) ? kNoPrivacy : epsilon * fractions[i];
    ASSIGN_OR_RETURN(NoisyMarginal measured,
                     MeasureMarginal(dataset, marginals[i], share,
                                     DeriveSeed(seed, i), &result.ledger));
    ProjectedTable projected = ProjectNonnegative(measured.counts, 1.0);
    for (std::string& w : projected.warnings) {
      result.warnings.push_back(StrCat("marginal ", i, ": ", std::move(w)));
    }

    if (measured.attributes.size() == 3) {
      // The (A, Y, Yhat) table is laid out exactly like JointCounts.
      std::copy(projected.values.begin(), projected.values.end(),
                model.joint.begin());
      have_joint = true;
    } else if (i >= plan.fairness_marginals.size()) {
      const int k0 = measured.shape[0];
      const int k1 = measured.shape[1];
      std::vector<double> first(k0, 0.0), second(k1, 0.0);
      for (int u = 0; u < k0; ++u) {
        for (int v = 0; v < k1; ++v) {
          const double p = projected.values[u * k1 + v];
          first[u] += p;
          second[v] += p;
        }
      }
      for (int side = 0; side < 2; ++side) {
        const size_t column = *schema.IndexOf(measured.attributes[side]);
        const std::vector<double>& dist = side == 0 ? first : second;
        if (sums[column].empty()) sums[column].assign(dist.size(), 0.0);
        for (size_t v = 0; v < dist.size(); ++v) sums[column][v] += dist[v];
        ++contributions[column];
      }
    }
    model.measurements.push_back(std::move(measured));
  }
  if (!have_joint) {
    return absl::InvalidArgumentError(
        "plan does not measure the (A, Y, Yhat) marginal");
  }

  for (size_t column : schema.FeatureIndices()) {
    const int k = schema.attribute(column).cardinality();
    std::vector<double>& dist = model.feature_distributions[column];
    if (contributions[column] == 0) {
      result.warnings.push_back(
          StrCat("feature ", schema.attribute(column).name,
                 " is in no measured pair; sampling it uniformly"));
      dist.assign(k, 1.0 / k);
      continue;
    }
    dist = sums[column];
    for (double& p : dist) p /= contributions[column];
  }
  return result;
}

absl::StatusOr<Dataset> GenerateSynthetic(const GenerativeModel& model,
                                          int64_t n_prime, uint64_t seed) {
  if (n_prime < 1) {
    return absl::InvalidArgumentError("n_prime must be at least 1");
  }
  const Schema& schema = model.schema;
  const CategoricalSampler joint(model.joint);
  const std::vector<size_t> features = schema.FeatureIndices();
  std::vector<CategoricalSampler> feature_samplers;
  for (size_t column : features) {
    feature_samplers.emplace_back(model.feature_distributions[column]);
  }

  const size_t width = schema.size();
  std::vector<int32_t> codes(static_cast<size_t>(n_prime) * width, 0);
  Rng rng(seed);
  for (int64_t r = 0; r < n_prime; ++r) {
    int32_t* row = codes.data() + r * width;
    const int cell = joint.Sample(rng);
    row[schema.protected_index()] = cell / 4;
    row[schema.target_index()] = (cell / 2) % 2;
    row[schema.prediction_index()] = cell % 2;
    for (size_t f = 0; f < features.size(); ++f) {
      row[features[f]] = feature_samplers[f].Sample(rng);
    }
  }
  return Dataset::Create(schema, std::move(codes));
}

}  // namespace fairaudit
