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

#include "fairaudit/mechanisms/budget_ledger.h"

#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

// JSON has no infinity literal.
nlohmann::json EpsilonToJson(double epsilon) {
  if (std::isinf(epsilon)) return "inf";
  return epsilon;
}

}  // namespace

void BudgetLedger::Record(std::string label, double epsilon) {
  entries_.push_back(Entry{std::move(label), epsilon});
}

void BudgetLedger::Append(const BudgetLedger& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

double BudgetLedger::total() const {
  // Neumaier summation so split budgets add back to the requested value.
  double sum = 0, compensation = 0;
  for (const Entry& e : entries_) {
    if (std::isinf(e.epsilon)) return kNoPrivacy;
    const double t = sum + e.epsilon;
    if (std::abs(sum) >= std::abs(e.epsilon)) {
      compensation += (sum - t) + e.epsilon;
    } else {
      compensation += (e.epsilon - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

nlohmann::json BudgetLedger::ToJson() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const Entry& e : entries_) {
    entries.push_back(
        {{"label", e.label}, {"epsilon", EpsilonToJson(e.epsilon)}});
  }
  return {{"entries", std::move(entries)},
          {"total_epsilon", EpsilonToJson(total())}};
}

absl::StatusOr<BudgetLedger> BudgetLedger::FromJson(
    const nlohmann::json& json) {
  BudgetLedger ledger;
  try {
    for (const nlohmann::json& e : json.at("entries")) {
      const nlohmann::json& eps = e.at("epsilon");
      const double epsilon = eps.is_string() && eps.get<std::string>() == "inf"
                                 ? kNoPrivacy
                                 : eps.get<double>();
      ledger.Record(e.at("label").get<std::string>(), epsilon);
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(StrCat("malformed ledger: ", e.what()));
  }
  return ledger;
}

}  // namespace fairaudit
