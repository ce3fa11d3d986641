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

#ifndef FAIRAUDIT_MECHANISMS_BUDGET_LEDGER_H_
#define FAIRAUDIT_MECHANISMS_BUDGET_LEDGER_H_

#include <limits>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"

namespace fairaudit {

// Epsilon passed as "no noise". Mechanisms given this value release exact
// data and the ledger records an infinite spend.
inline constexpr double kNoPrivacy = std::numeric_limits<double>::infinity();

// Privacy spend under sequential composition. Only the platform appends;
// anything computed from a release is post-processing and leaves it alone.
class BudgetLedger {
 public:
  struct Entry {
    std::string label;
    double epsilon = 0;
    bool operator==(const Entry&) const = default;
  };

  void Record(std::string label, double epsilon);
  void Append(const BudgetLedger& other);

  const std::vector<Entry>& entries() const { return entries_; }
  // Compensated sum of all entries.
  double total() const;

  nlohmann::json ToJson() const;
  static absl::StatusOr<BudgetLedger> FromJson(const nlohmann::json& json);

  bool operator==(const BudgetLedger&) const = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace fairaudit

#endif  // FAIRAUDIT_MECHANISMS_BUDGET_LEDGER_H_
