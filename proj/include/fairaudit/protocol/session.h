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

#ifndef FAIRAUDIT_PROTOCOL_SESSION_H_
#define FAIRAUDIT_PROTOCOL_SESSION_H_

#include <atomic>
#include <cstdint>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/mechanisms/budget_ledger.h"
#include "fairaudit/metrics/report.h"
#include "fairaudit/model/classifier.h"
#include "fairaudit/protocol/messages.h"
#include "fairaudit/protocol/platform.h"

namespace fairaudit {

// Forwards to another classifier and counts predicted rows.
class CountingClassifier : public Classifier {
 public:
  explicit CountingClassifier(const Classifier& inner) : inner_(inner) {}

  absl::StatusOr<std::vector<size_t>> BindColumns(
      const Schema& schema) const override {
    return inner_.BindColumns(schema);
  }
  int PredictInputs(std::span<const int32_t> inputs) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.PredictInputs(inputs);
  }

  int64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  const Classifier& inner_;
  mutable std::atomic<int64_t> calls_{0};
};

struct SessionTranscript {
  AuditRequest request;
  AuditRelease release;
  FairnessReport report;
  int requests_sent = 0;
  int releases_sent = 0;
  int64_t platform_model_calls = 0;
  int64_t auditor_model_calls = 0;
  BudgetLedger ledger_before_evaluation{};
  BudgetLedger ledger_after_evaluation{};
};

// One complete exchange. The request and the release cross between the
// parties only in their serialized forms, so the session also exercises
// the wire format.
absl::StatusOr<SessionTranscript> RunAuditSession(
    const AuditRequest& request, const Dataset& audit_data,
    const Classifier& model, uint64_t seed,
    const PlatformOptions& options = {});

}  // namespace fairaudit

#endif  // FAIRAUDIT_PROTOCOL_SESSION_H_
