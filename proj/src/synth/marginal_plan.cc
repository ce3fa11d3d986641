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

#include "fairaudit/synth/marginal_plan.h"

#include <algorithm>

#include "absl/status/status.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

std::vector<std::vector<std::string>> MarginalPlan::Marginals() const {
  std::vector<std::vector<std::string>> all = fairness_marginals;
  for (const auto& [first, second] : feature_pairs) {
    all.push_back({first, second});
  }
  return all;
}

std::vector<double> MarginalPlan::BudgetFractions() const {
  std::vector<double> fractions(fairness_marginals.size(),
                                fairness_fraction_each);
  fractions.insert(fractions.end(), feature_pairs.size(),
                   feature_fraction_each);
  return fractions;
}

nlohmann::json MarginalPlan::ToJson() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [first, second] : feature_pairs) {
    pairs.push_back({first, second});
  }
  return {{"fairness_marginals", fairness_marginals},
          {"feature_pairs", std::move(pairs)},
          {"fairness_fraction_each", fairness_fraction_each},
          {"feature_fraction_each", feature_fraction_each}};
}

absl::StatusOr<MarginalPlan> MarginalPlan::FromJson(
    const nlohmann::json& json) {
  MarginalPlan plan;
  try {
    plan.fairness_marginals = json.at("fairness_marginals")
                                  .get<std::vector<std::vector<std::string>>>();
    for (const auto& pair : json.at("feature_pairs")) {
      plan.feature_pairs.push_back(
          {pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
    }
    plan.fairness_fraction_each =
        json.at("fairness_fraction_each").get<double>();
    plan.feature_fraction_each = json.at("feature_fraction_each").get<double>();
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(StrCat("malformed plan: ", e.what()));
  }
  return plan;
}

absl::StatusOr<MarginalPlan> PlanMarginals(const Schema& schema, uint64_t seed,
                                           const PlanOptions& options) {
  if (options.feature_pairs < 0) {
    return absl::InvalidArgumentError("feature_pairs must be nonnegative");
  }
  if (!(options.fairness_share > 0 && options.fairness_share <= 1)) {
    return absl::InvalidArgumentError("fairness_share must be in (0, 1]");
  }
  if (options.fairness_share == 1 && options.feature_pairs > 0) {
    return absl::InvalidArgumentError(
        "fairness_share of 1 leaves no budget for feature pairs");
  }
  const std::string& a = schema.attribute(schema.protected_index()).name;
  const std::string& y = schema.attribute(schema.target_index()).name;
  const std::string& yhat = schema.attribute(schema.prediction_index()).name;

  MarginalPlan plan;
  plan.fairness_marginals = {{a, y}, {a, yhat}, {y, yhat}, {a, y, yhat}};

  const std::vector<size_t> features = schema.FeatureIndices();
  std::vector<std::array<size_t, 2>> candidates;
  for (size_t i = 0; i < features.size(); ++i) {
    for (size_t j = i + 1; j < features.size(); ++j) {
      candidates.push_back({features[i], features[j]});
    }
  }
  Rng rng(seed);
  const size_t wanted = static_cast<size_t>(options.feature_pairs);
  const size_t take = std::min(wanted, candidates.size());
  // Partial Fisher-Yates: the first `take` slots become a uniform sample.
  for (size_t i = 0; i < take; ++i) {
    std::uniform_int_distribution<size_t> pick(i, candidates.size() - 1);
    std::swap(candidates[i], candidates[pick(rng)]);
  }
  for (size_t i = 0; i < take; ++i) {
    plan.feature_pairs.push_back({schema.attribute(candidates[i][0]).name,
                                  schema.attribute(candidates[i][1]).name});
  }
  if (take < wanted) {
    plan.warnings.push_back(StrCat("only ", take,
                                   " distinct feature pairs available; ",
                                   wanted, " requested"));
  }

  const double fairness_share =
      plan.feature_pairs.empty() ? 1.0 : options.fairness_share;
  plan.fairness_fraction_each =
      fairness_share / static_cast<double>(plan.fairness_marginals.size());
  plan.feature_fraction_each =
      plan.feature_pairs.empty()
          ? 0.0
          : (1.0 - fairness_share) /
                static_cast<double>(plan.feature_pairs.size());
  return plan;
}

}  // namespace fairaudit
