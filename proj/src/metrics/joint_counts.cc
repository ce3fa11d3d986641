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

#include "fairaudit/metrics/joint_counts.h"

#include <array>
#include <cstdint>

namespace fairaudit {

double JointCounts::total() const {
  double sum = 0;
  for (double c : cells_) sum += c;
  return sum;
}

JointCounts CountJoint(const Dataset& dataset) {
  const Schema& schema = dataset.schema();
  const size_t a_col = schema.protected_index();
  const size_t y_col = schema.target_index();
  const size_t yhat_col = schema.prediction_index();
  std::array<int64_t, JointCounts::kCells> tally{};
  for (size_t r = 0; r < dataset.num_rows(); ++r) {
    const auto row = dataset.row(r);
    ++tally[JointCounts::Index(row[a_col], row[y_col], row[yhat_col])];
  }
  JointCounts counts;
  for (size_t i = 0; i < tally.size(); ++i) {
    counts.cells()[i] = static_cast<double>(tally[i]);
  }
  return counts;
}

}  // namespace fairaudit
