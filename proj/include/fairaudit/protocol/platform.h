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

#ifndef FAIRAUDIT_PROTOCOL_PLATFORM_H_
#define FAIRAUDIT_PROTOCOL_PLATFORM_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"
#include "fairaudit/model/classifier.h"
#include "fairaudit/protocol/messages.h"
#include "fairaudit/synth/marginal_plan.h"

namespace fairaudit {

struct PlatformOptions {
  std::string platform_id = "platform";
  PlanOptions plan;
};

// Platform side of one audit: labels `audit_data` with `model`, privatizes
// it with the requested mechanism and packages the release.
//
// GRR releases min(n_prime, |audit_data|) rows: a uniform subsample without
// replacement when n_prime is smaller, the whole set plus a "capped" warning
// when it is larger. Every column is perturbed. Synthesis always releases
// exactly n_prime rows.
//
// Sub-seeds: subsample DeriveSeed(seed, 1), perturbation DeriveSeed(seed, 2),
// plan DeriveSeed(seed, 3), fit DeriveSeed(seed, 4), generation
// DeriveSeed(seed, 5).
absl::StatusOr<AuditRelease> PlatformRespond(
    const AuditRequest& request, const Dataset& audit_data,
    const Classifier& model, uint64_t seed,
    const PlatformOptions& options = {});

}  // namespace fairaudit

#endif  // FAIRAUDIT_PROTOCOL_PLATFORM_H_
