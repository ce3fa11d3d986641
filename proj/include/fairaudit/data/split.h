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

#ifndef FAIRAUDIT_DATA_SPLIT_H_
#define FAIRAUDIT_DATA_SPLIT_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"

namespace fairaudit {

struct TrainTestSplit {
  Dataset train;
  Dataset test;
};

// Seeded random partition into floor(n * train_fraction) training rows and
// the rest. Both parts keep the original relative row order.
absl::StatusOr<TrainTestSplit> Split(const Dataset& dataset,
                                     double train_fraction, uint64_t seed);

// `count` distinct rows drawn uniformly without replacement, in original
// order. Requires count <= num_rows.
Dataset SampleRows(const Dataset& dataset, size_t count, uint64_t seed);

}  // namespace fairaudit

#endif  // FAIRAUDIT_DATA_SPLIT_H_
