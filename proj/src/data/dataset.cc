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

#include "fairaudit/data/dataset.h"

#include "absl/status/status.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

absl::StatusOr<Dataset> Dataset::Create(Schema schema,
                                        std::vector<int32_t> codes) {
  const size_t width = schema.size();
  if (width == 0) {
    if (!codes.empty()) {
      return absl::InvalidArgumentError("codes given for an empty schema");
    }
    return Dataset(std::move(schema), std::move(codes));
  }
  if (codes.size() % width != 0) {
    return absl::InvalidArgumentError(StrCat(
        "code count ", codes.size(), " is not a multiple of width ", width));
  }
  for (size_t i = 0; i < codes.size(); ++i) {
    const AttributeSpec& spec = schema.attribute(i % width);
    if (codes[i] < 0 || codes[i] >= spec.cardinality()) {
      return absl::InvalidArgumentError(
          StrCat("code ", codes[i], " out of range at row ", i / width + 1,
                 ", column ", spec.name));
    }
  }
  return Dataset(std::move(schema), std::move(codes));
}

std::vector<int32_t> Dataset::Column(size_t column) const {
  std::vector<int32_t> out(num_rows());
  for (size_t r = 0; r < out.size(); ++r) out[r] = at(r, column);
  return out;
}

Dataset Dataset::SelectRows(std::span<const size_t> indices) const {
  std::vector<int32_t> codes;
  codes.reserve(indices.size() * num_columns());
  for (size_t i : indices) {
    const auto r = row(i);
    codes.insert(codes.end(), r.begin(), r.end());
  }
  return Dataset(schema_, std::move(codes));
}

absl::StatusOr<Dataset> Dataset::WithColumn(
    size_t column, std::span<const int32_t> values) const {
  if (column >= num_columns()) {
    return absl::OutOfRangeError(StrCat("no column ", column));
  }
  if (values.size() != num_rows()) {
    return absl::InvalidArgumentError(
        StrCat("expected ", num_rows(), " values, got ", values.size()));
  }
  const int k = schema_.attribute(column).cardinality();
  std::vector<int32_t> codes = codes_;
  for (size_t r = 0; r < values.size(); ++r) {
    if (values[r] < 0 || values[r] >= k) {
      return absl::InvalidArgumentError(
          StrCat("code ", values[r], " out of range at row ", r + 1,
                 ", column ", schema_.attribute(column).name));
    }
    codes[r * num_columns() + column] = values[r];
  }
  return Dataset(schema_, std::move(codes));
}

}  // namespace fairaudit
