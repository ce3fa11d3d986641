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

#ifndef FAIRAUDIT_EXPERIMENT_DESK_DATA_H_
#define FAIRAUDIT_EXPERIMENT_DESK_DATA_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"

namespace fairaudit {

inline constexpr int64_t kDeskDataRows = 25000;

// Census-like schema: protected "sex" (1 = female), eight categorical
// features, target "income_high" and prediction "predicted_high".
Schema DeskSchema();

// Synthetic population with group-dependent feature mixes and base rates
// (women are more often part-time and in lower-paid occupations, and have a
// lower positive rate). The prediction column is 0 until labeled.
absl::StatusOr<Dataset> MakeDeskData(int64_t rows, uint64_t seed);

}  // namespace fairaudit

#endif  // FAIRAUDIT_EXPERIMENT_DESK_DATA_H_
