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

#include "fairaudit/protocol/session.h"

#include "fairaudit/protocol/auditor.h"
#include "fairaudit/util/status_macros.h"

namespace fairaudit {

absl::StatusOr<SessionTranscript> RunAuditSession(
    const AuditRequest& request, const Dataset& audit_data,
    const Classifier& model, uint64_t seed, const PlatformOptions& options) {
  CountingClassifier counted(model);

  // Step 1: auditor -> platform.
  const std::string request_wire = request.Serialize();
  ASSIGN_OR_RETURN(const AuditRequest received,
                   AuditRequest::Parse(request_wire));

  // Steps 2-5 on the platform.
  ASSIGN_OR_RETURN(
      const AuditRelease sent,
      PlatformRespond(received, audit_data, counted, seed, options));
  const std::string csv_wire = sent.CsvText();
  const std::string meta_wire = sent.MetadataText();
  const int64_t platform_calls = counted.calls();

  // Step 6 on the auditor, from the wire copy only.
  ASSIGN_OR_RETURN(AuditRelease release,
                   AuditRelease::Parse(csv_wire, meta_wire));
  const BudgetLedger before = release.ledger;
  ASSIGN_OR_RETURN(FairnessReport report, AuditorEvaluate(release, request));

  SessionTranscript transcript{.request = request,
                               .release = std::move(release),
                               .report = std::move(report)};
  transcript.requests_sent = 1;
  transcript.releases_sent = 1;
  transcript.platform_model_calls = platform_calls;
  transcript.auditor_model_calls = counted.calls() - platform_calls;
  transcript.ledger_before_evaluation = before;
  transcript.ledger_after_evaluation = transcript.release.ledger;
  return transcript;
}

}  // namespace fairaudit
