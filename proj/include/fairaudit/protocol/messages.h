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

#ifndef FAIRAUDIT_PROTOCOL_MESSAGES_H_
#define FAIRAUDIT_PROTOCOL_MESSAGES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/mechanisms/budget_ledger.h"
#include "fairaudit/mechanisms/grr.h"
#include "fairaudit/metrics/fairness.h"
#include "fairaudit/synth/marginal_plan.h"

namespace fairaudit {

// Epsilon as text: a decimal or "inf" for the no-privacy sentinel.
std::string FormatEpsilon(double epsilon);
absl::StatusOr<double> ParseEpsilon(std::string_view text);

enum class MechanismKind { kGrr, kSynth };

std::string_view MechanismName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanism(std::string_view name);

// Auditor -> platform. Text form is one "key=value" per line:
//   n_prime=5000
//   protected_attribute=sex
//   metrics=demographic_parity,equalized_odds
//   mechanism=grr
//   epsilon=10            ("inf" for the no-noise sentinel)
//   epsilon_mode=per-column
struct AuditRequest {
  int64_t n_prime = 0;
  std::string protected_attribute;
  std::vector<Metric> requested_metrics = {std::begin(kAllMetrics),
                                           std::end(kAllMetrics)};
  MechanismKind mechanism = MechanismKind::kGrr;
  double epsilon = 1.0;
  EpsilonMode epsilon_mode = EpsilonMode::kPerColumn;

  absl::Status Validate() const;
  bool NeedsGroundTruth() const;

  std::string Serialize() const;
  static absl::StatusOr<AuditRequest> Parse(std::string_view text);

  bool operator==(const AuditRequest&) const = default;
};

// Platform -> auditor: the privatized data plus everything needed to
// interpret it. On the wire it is a CSV of decoded labels and a JSON
// metadata document (schema, mechanism parameters, ledger, provenance).
struct AuditRelease {
  Dataset dataset;
  MechanismKind mechanism = MechanismKind::kGrr;
  double requested_epsilon = 0;
  EpsilonMode epsilon_mode = EpsilonMode::kPerColumn;
  // GRR only: one entry per perturbed column.
  std::vector<GrrColumnParams> grr_columns{};
  // Synthesis only.
  std::optional<MarginalPlan> synth_plan{};
  BudgetLedger ledger{};
  std::string platform_id{};
  std::string seed_commitment{};
  std::vector<std::string> warnings{};

  std::string MetadataText() const;
  std::string CsvText() const;
  static absl::StatusOr<AuditRelease> Parse(std::string_view csv_text,
                                            std::string_view metadata_text);
};

absl::Status WriteRequest(const AuditRequest& request, const std::string& path);
absl::StatusOr<AuditRequest> ReadRequest(const std::string& path);

// Writes `<base>.csv` and `<base>.meta.json`.
absl::Status WriteRelease(const AuditRelease& release, const std::string& base);
absl::StatusOr<AuditRelease> ReadRelease(const std::string& base);

}  // namespace fairaudit

#endif  // FAIRAUDIT_PROTOCOL_MESSAGES_H_
