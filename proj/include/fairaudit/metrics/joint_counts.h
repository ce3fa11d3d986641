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

#ifndef FAIRAUDIT_METRICS_JOINT_COUNTS_H_
#define FAIRAUDIT_METRICS_JOINT_COUNTS_H_

#include <array>
#include <cstddef>

#include "fairaudit/data/dataset.h"

namespace fairaudit {

// Real-valued 2x2x2 table over (protected A, target Y, prediction Yhat).
// Real cells let the same code serve empirical, debiased and synthetic
// counts.
class JointCounts {
 public:
  static constexpr size_t kCells = 8;

  JointCounts() { cells_.fill(0.0); }
  explicit JointCounts(const std::array<double, kCells>& cells)
      : cells_(cells) {}

  static constexpr size_t Index(int a, int y, int yhat) {
    return static_cast<size_t>(a * 4 + y * 2 + yhat);
  }

  double at(int a, int y, int yhat) const { return cells_[Index(a, y, yhat)]; }
  double& at(int a, int y, int yhat) { return cells_[Index(a, y, yhat)]; }

  const std::array<double, kCells>& cells() const { return cells_; }
  std::array<double, kCells>& cells() { return cells_; }

  double total() const;

  bool operator==(const JointCounts&) const = default;

 private:
  std::array<double, kCells> cells_;
};

// Tally of (A, Y, Yhat) over the dataset rows.
JointCounts CountJoint(const Dataset& dataset);

}  // namespace fairaudit

#endif  // FAIRAUDIT_METRICS_JOINT_COUNTS_H_
