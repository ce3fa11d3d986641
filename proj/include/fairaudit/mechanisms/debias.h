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

#ifndef FAIRAUDIT_MECHANISMS_DEBIAS_H_
#define FAIRAUDIT_MECHANISMS_DEBIAS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/mechanisms/grr.h"
#include "fairaudit/metrics/joint_counts.h"

namespace fairaudit {

// Binary GRR channels applied to the protected, target and prediction
// columns. The joint channel on the 8-cell table is their tensor product.
struct JointChannels {
  GrrChannel protected_attr;
  GrrChannel target;
  GrrChannel prediction;
};

// Expected perturbed table given the true one.
JointCounts ExpectedPerturbedCounts(const JointCounts& truth,
                                    const JointChannels& channels);

// Applies the inverse tensor-product channel axis by axis. The result is an
// unbiased estimate of the true table and may have negative cells.
absl::StatusOr<JointCounts> InvertJointChannel(const JointCounts& perturbed,
                                               const JointChannels& channels);

struct DebiasResult {
  JointCounts counts;     // clamped to >= 0, rescaled to the input total
  JointCounts unclamped;  // raw linear inverse
  std::vector<std::string> warnings;
};

// InvertJointChannel followed by clamping negative cells to zero and
// rescaling to the perturbed total. Warns when clamping moved any cell by
// more than 1% of the total.
absl::StatusOr<DebiasResult> DebiasGrrCounts(const JointCounts& perturbed,
                                             const JointChannels& channels);

}  // namespace fairaudit

#endif  // FAIRAUDIT_MECHANISMS_DEBIAS_H_
