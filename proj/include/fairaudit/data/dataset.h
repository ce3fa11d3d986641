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

#ifndef FAIRAUDIT_DATA_DATASET_H_
#define FAIRAUDIT_DATA_DATASET_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/schema.h"

namespace fairaudit {

// Immutable table of category codes, stored row-major with one code per
// schema attribute.
class Dataset {
 public:
  explicit Dataset(Schema schema) : schema_(std::move(schema)) {}

  // Validates that `codes` holds whole rows and every code is in range.
  static absl::StatusOr<Dataset> Create(Schema schema,
                                        std::vector<int32_t> codes);

  const Schema& schema() const { return schema_; }
  size_t num_rows() const {
    return schema_.size() == 0 ? 0 : codes_.size() / schema_.size();
  }
  size_t num_columns() const { return schema_.size(); }

  std::span<const int32_t> row(size_t i) const {
    return std::span<const int32_t>(codes_).subspan(i * schema_.size(),
                                                    schema_.size());
  }
  int32_t at(size_t row, size_t column) const {
    return codes_[row * schema_.size() + column];
  }
  const std::vector<int32_t>& codes() const { return codes_; }
  std::vector<int32_t> Column(size_t column) const;

  // Rows at `indices`, in the given order.
  Dataset SelectRows(std::span<const size_t> indices) const;

  // Copy with column `column` replaced by `values` (validated).
  absl::StatusOr<Dataset> WithColumn(size_t column,
                                     std::span<const int32_t> values) const;

  bool operator==(const Dataset& other) const = default;

 private:
  Dataset(Schema schema, std::vector<int32_t> codes)
      : schema_(std::move(schema)), codes_(std::move(codes)) {}

  Schema schema_;
  std::vector<int32_t> codes_;
};

}  // namespace fairaudit

#endif  // FAIRAUDIT_DATA_DATASET_H_
