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

#ifndef FAIRAUDIT_MODEL_CLASSIFIER_H_
#define FAIRAUDIT_MODEL_CLASSIFIER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"

namespace fairaudit {

// A binary classifier over categorical inputs. Input columns are resolved
// by name against a dataset schema once, then rows are predicted from the
// gathered codes.
class Classifier {
 public:
  virtual ~Classifier() = default;

  // Schema column of each model input, in input order.
  virtual absl::StatusOr<std::vector<size_t>> BindColumns(
      const Schema& schema) const = 0;

  // `inputs[i]` is the code of input i. Returns 0 or 1.
  virtual int PredictInputs(std::span<const int32_t> inputs) const = 0;
};

// Copy of `dataset` with the prediction column filled by `classifier`.
absl::StatusOr<Dataset> Label(const Classifier& classifier,
                              const Dataset& dataset);

}  // namespace fairaudit

#endif  // FAIRAUDIT_MODEL_CLASSIFIER_H_
