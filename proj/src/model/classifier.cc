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

#include "fairaudit/model/classifier.h"

#include "fairaudit/util/status_macros.h"

namespace fairaudit {

absl::StatusOr<Dataset> Label(const Classifier& classifier,
                              const Dataset& dataset) {
  ASSIGN_OR_RETURN(const std::vector<size_t> columns,
                   classifier.BindColumns(dataset.schema()));
  std::vector<int32_t> predictions(dataset.num_rows());
  std::vector<int32_t> inputs(columns.size());
  for (size_t r = 0; r < dataset.num_rows(); ++r) {
    const auto row = dataset.row(r);
    for (size_t i = 0; i < columns.size(); ++i) inputs[i] = row[columns[i]];
    predictions[r] = classifier.PredictInputs(inputs);
  }
  return dataset.WithColumn(dataset.schema().prediction_index(), predictions);
}

}  // namespace fairaudit
