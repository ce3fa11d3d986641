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

#include "fairaudit/protocol/platform.h"

#include "absl/status/status.h"
#include "fairaudit/data/split.h"
#include "fairaudit/mechanisms/grr.h"
#include "fairaudit/synth/generative_model.h"
#include "fairaudit/util/random.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

absl::StatusOr<AuditRelease> PlatformRespond(const AuditRequest& request,
                                             const Dataset& audit_data,
                                             const Classifier& model,
                                             uint64_t seed,
                                             const PlatformOptions& options) {
  RETURN_IF_ERROR(request.Validate());
  const Schema& schema = audit_data.schema();
  if (schema.attribute(schema.protected_index()).name !=
      request.protected_attribute) {
    return absl::InvalidArgumentError(
        StrCat("request rejected: ", request.protected_attribute,
               " is not the protected attribute of the audit data"));
  }
  if (audit_data.num_rows() == 0) {
    return absl::FailedPreconditionError("audit dataset is empty");
  }

  // Step 2: label the audit data.
  ASSIGN_OR_RETURN(const Dataset labeled, Label(model, audit_data));

  AuditRelease release{.dataset = Dataset(schema)};
  release.mechanism = request.mechanism;
  release.requested_epsilon = request.epsilon;
  release.epsilon_mode = request.epsilon_mode;
  release.platform_id = options.platform_id;
  release.seed_commitment = SeedCommitment(seed);

  // Steps 3-4.
  if (request.mechanism == MechanismKind::kGrr) {
    const size_t available = labeled.num_rows();
    const size_t wanted = static_cast<size_t>(request.n_prime);
    Dataset selected = labeled;
    if (wanted < available) {
      selected = SampleRows(labeled, wanted, DeriveSeed(seed, 1));
    } else if (wanted > available) {
      release.warnings.push_back(StrCat("capped: n_prime ", wanted,
                                        " exceeds the ", available,
                                        " audit rows; releasing all of them"));
    }
    const double per_column =
        PerColumnEpsilon(request.epsilon, request.epsilon_mode, schema.size());
    ASSIGN_OR_RETURN(GrrResult perturbed,
                     GrrPerturb(selected, per_column, {}, DeriveSeed(seed, 2)));
    release.dataset = std::move(perturbed.dataset);
    release.grr_columns = std::move(perturbed.columns);
    release.ledger = std::move(perturbed.ledger);
  } else {
    ASSIGN_OR_RETURN(MarginalPlan plan,
                     PlanMarginals(schema, DeriveSeed(seed, 3), options.plan));
    ASSIGN_OR_RETURN(FitResult fit,
                     FitGenerativeModel(labeled, plan, request.epsilon,
                                        DeriveSeed(seed, 4)));
    ASSIGN_OR_RETURN(
        release.dataset,
        GenerateSynthetic(fit.model, request.n_prime, DeriveSeed(seed, 5)));
    release.warnings.insert(release.warnings.end(), plan.warnings.begin(),
                            plan.warnings.end());
    release.warnings.insert(release.warnings.end(), fit.warnings.begin(),
                            fit.warnings.end());
    release.synth_plan = std::move(plan);
    release.ledger = std::move(fit.ledger);
  }
  return release;
}

}  // namespace fairaudit
