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

#include "fairaudit/data/split.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "fairaudit/util/random.h"

namespace fairaudit {
namespace {

std::vector<size_t> ShuffledIndices(size_t n, uint64_t seed) {
  std::vector<size_t> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  Rng rng(seed);
  // Fisher-Yates with our own index draw so the permutation does not depend
  // on std::shuffle's unspecified algorithm.
  for (size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<size_t> pick(0, i - 1);
    std::swap(indices[i - 1], indices[pick(rng)]);
  }
  return indices;
}

}  // namespace

absl::StatusOr<TrainTestSplit> Split(const Dataset& dataset,
                                     double train_fraction, uint64_t seed) {
  if (!(train_fraction > 0 && train_fraction < 1)) {
    return absl::InvalidArgumentError("train_fraction must be in (0, 1)");
  }
  const size_t n = dataset.num_rows();
  const size_t n_train =
      // The slack keeps e.g. 100 * 0.29 from flooring to 28.
      static_cast<size_t>(
          std::floor(static_cast<double>(n) * train_fraction + 1e-9));
  std::vector<size_t> indices = ShuffledIndices(n, seed);
  std::sort(indices.begin(), indices.begin() + n_train);
  std::sort(indices.begin() + n_train, indices.end());
  std::span<const size_t> all(indices);
  return TrainTestSplit{dataset.SelectRows(all.first(n_train)),
                        dataset.SelectRows(all.subspan(n_train))};
}

Dataset SampleRows(const Dataset& dataset, size_t count, uint64_t seed) {
  count = std::min(count, dataset.num_rows());
  std::vector<size_t> indices = ShuffledIndices(dataset.num_rows(), seed);
  indices.resize(count);
  std::sort(indices.begin(), indices.end());
  return dataset.SelectRows(indices);
}

}  // namespace fairaudit
