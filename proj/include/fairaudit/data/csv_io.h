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

#ifndef FAIRAUDIT_DATA_CSV_IO_H_
#define FAIRAUDIT_DATA_CSV_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "fairaudit/data/dataset.h"

namespace fairaudit {

using CsvRecord = std::vector<std::string>;

// RFC 4180 parsing: quoted fields, doubled quotes, embedded separators and
// newlines, LF or CRLF record ends. A trailing newline does not produce an
// empty record.
absl::StatusOr<std::vector<CsvRecord>> ParseCsv(std::string_view text);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string EscapeCsvField(std::string_view field);

// Encodes a CSV whose header names the schema attributes (any column order).
// Rows with an unknown label or a missing cell are rejected with the 1-based
// data row and the column name. A file with no bytes or only a header gives
// an empty dataset. The prediction column may be absent from the header; it
// is then filled with code 0 until a model labels the data.
absl::StatusOr<Dataset> EncodeCsv(std::string_view text, const Schema& schema);
absl::StatusOr<Dataset> IngestCsv(const std::string& csv_path,
                                  const Schema& schema);
absl::StatusOr<Dataset> IngestCsv(const std::string& csv_path,
                                  const std::string& schema_path);

// Writes the header and decoded labels, in schema order.
void WriteCsv(const Dataset& dataset, std::ostream& out);
absl::Status WriteCsvFile(const Dataset& dataset, const std::string& path);

absl::StatusOr<std::string> ReadFile(const std::string& path);

}  // namespace fairaudit

#endif  // FAIRAUDIT_DATA_CSV_IO_H_
