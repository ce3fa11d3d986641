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

#include "fairaudit/mechanisms/debias.h"

#include <array>
#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

using Table = std::array<double, JointCounts::kCells>;

// Contracts axis `axis` (0 = A, 1 = Y, 2 = Yhat) of the table with the 2x2
// row-major matrix `m`, as out[.., i, ..] = sum_j m[j][i] * in[.., j, ..].
Table ApplyTransposedOnAxis(const Table& in, const std::vector<double>& m,
                            int axis) {
  const int stride = 4 >> axis;
  Table out{};
  for (size_t cell = 0; cell < in.size(); ++cell) {
    const int i = static_cast<int>(cell / stride) % 2;
    const size_t base = cell - static_cast<size_t>(i * stride);
    double sum = 0;
    for (int j = 0; j < 2; ++j) sum += m[j * 2 + i] * in[base + j * stride];
    out[cell] = sum;
  }
  return out;
}

absl::Status CheckBinary(const JointChannels& channels) {
  for (const GrrChannel* c :
       {&channels.protected_attr, &channels.target, &channels.prediction}) {
    if (c->k() != 2) {
      return absl::InvalidArgumentError(
          StrCat("joint channel axes must be binary, got k=", c->k()));
    }
  }
  return absl::OkStatus();
}

}  // namespace

JointCounts ExpectedPerturbedCounts(const JointCounts& truth,
                                    const JointChannels& channels) {
  Table t = truth.cells();
  t = ApplyTransposedOnAxis(t, channels.protected_attr.Matrix(), 0);
  t = ApplyTransposedOnAxis(t, channels.target.Matrix(), 1);
  t = ApplyTransposedOnAxis(t, channels.prediction.Matrix(), 2);
  return JointCounts(t);
}

absl::StatusOr<JointCounts> InvertJointChannel(const JointCounts& perturbed,
                                               const JointChannels& channels) {
  RETURN_IF_ERROR(CheckBinary(channels));
  ASSIGN_OR_RETURN(const std::vector<double> inv_a,
                   channels.protected_attr.InverseMatrix());
  ASSIGN_OR_RETURN(const std::vector<double> inv_y,
                   channels.target.InverseMatrix());
  ASSIGN_OR_RETURN(const std::vector<double> inv_yhat,
                   channels.prediction.InverseMatrix());
  // (M^T)^-1 = (M^-1)^T on each axis.
  Table t = perturbed.cells();
  t = ApplyTransposedOnAxis(t, inv_a, 0);
  t = ApplyTransposedOnAxis(t, inv_y, 1);
  t = ApplyTransposedOnAxis(t, inv_yhat, 2);
  return JointCounts(t);
}

absl::StatusOr<DebiasResult> DebiasGrrCounts(const JointCounts& perturbed,
                                             const JointChannels& channels) {
  const double total = perturbed.total();
  if (!(total > 0)) {
    return absl::FailedPreconditionError("cannot debias an empty table");
  }
  ASSIGN_OR_RETURN(const JointCounts raw,
                   InvertJointChannel(perturbed, channels));
  DebiasResult result{raw, raw, {}};
  double kept = 0;
  for (double& c : result.counts.cells()) {
    if (c < 0) c = 0;
    kept += c;
  }
  if (!(kept > 0)) {
    return absl::FailedPreconditionError(
        "debiased table has no positive cells");
  }
  double worst_shift = 0;
  for (size_t i = 0; i < JointCounts::kCells; ++i) {
    double& c = result.counts.cells()[i];
    c = c * total / kept;
    worst_shift = std::max(worst_shift, std::abs(c - raw.cells()[i]));
  }
  if (worst_shift > 0.01 * total) {
    result.warnings.push_back(fmt::sprintf(
        "clamping negative debiased cells moved a cell by %.2f%% of the total",
        100 * worst_shift / total));
  }
  return result;
}

}  // namespace fairaudit
