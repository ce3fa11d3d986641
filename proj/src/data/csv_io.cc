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

#include "fairaudit/data/csv_io.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {

absl::StatusOr<std::vector<CsvRecord>> ParseCsv(std::string_view text) {
  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started || !field.empty()) {
          return absl::InvalidArgumentError(
              StrCat("stray quote on line ", line));
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    return absl::InvalidArgumentError("unterminated quoted field");
  }
  if (field_started || !record.empty()) end_record();
  return records;
}

std::string EscapeCsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

absl::StatusOr<Dataset> EncodeCsv(std::string_view text, const Schema& schema) {
  ASSIGN_OR_RETURN(std::vector<CsvRecord> records, ParseCsv(text));
  if (records.empty()) return Dataset(schema);

  const CsvRecord& header = records.front();
  // source_column[i] = CSV column feeding schema attribute i, or -1.
  std::vector<int> source_column(schema.size(), -1);
  for (size_t c = 0; c < header.size(); ++c) {
    const auto index = schema.IndexOf(header[c]);
    if (!index.has_value()) {
      return absl::InvalidArgumentError(
          StrCat("column ", header[c], " is not in the schema"));
    }
    if (source_column[*index] != -1) {
      return absl::InvalidArgumentError(
          StrCat("column ", header[c], " appears twice"));
    }
    source_column[*index] = static_cast<int>(c);
  }
  for (size_t i = 0; i < schema.size(); ++i) {
    if (source_column[i] == -1 && i != schema.prediction_index()) {
      return absl::InvalidArgumentError(
          StrCat("missing column ", schema.attribute(i).name));
    }
  }

  std::vector<int32_t> codes;
  codes.reserve((records.size() - 1) * schema.size());
  for (size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& record = records[r];
    if (record.size() != header.size()) {
      return absl::InvalidArgumentError(
          StrCat("row ", r, " has ", record.size(), " fields, expected ",
                 header.size()));
    }
    for (size_t i = 0; i < schema.size(); ++i) {
      const AttributeSpec& spec = schema.attribute(i);
      if (source_column[i] == -1) {
        codes.push_back(0);
        continue;
      }
      const std::string& cell = record[source_column[i]];
      if (cell.empty()) {
        return absl::InvalidArgumentError(
            StrCat("missing value at row ", r, ", column ", spec.name));
      }
      if (auto code = spec.Encode(cell); code.has_value()) {
        codes.push_back(*code);
        continue;
      }
      if (spec.binning.has_value()) {
        const std::string_view trimmed = Trim(cell);
        double value = 0;
        const auto [ptr, ec] = std::from_chars(
            trimmed.data(), trimmed.data() + trimmed.size(), value);
        if (ec == std::errc() && ptr == trimmed.data() + trimmed.size()) {
          codes.push_back(spec.binning->Bin(value));
          continue;
        }
      }
      return absl::InvalidArgumentError(
          StrCat("unknown value at row ", r, ", column ", spec.name));
    }
  }
  return Dataset::Create(schema, std::move(codes));
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::StatusOr<Dataset> IngestCsv(const std::string& csv_path,
                                  const Schema& schema) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(csv_path));
  auto dataset = EncodeCsv(text, schema);
  if (!dataset.ok()) {
    return absl::Status(dataset.status().code(),
                        StrCat(csv_path, ": ", dataset.status().message()));
  }
  return dataset;
}

absl::StatusOr<Dataset> IngestCsv(const std::string& csv_path,
                                  const std::string& schema_path) {
  ASSIGN_OR_RETURN(Schema schema, LoadSchema(schema_path));
  return IngestCsv(csv_path, schema);
}

void WriteCsv(const Dataset& dataset, std::ostream& out) {
  const Schema& schema = dataset.schema();
  for (size_t i = 0; i < schema.size(); ++i) {
    if (i > 0) out << ',';
    out << EscapeCsvField(schema.attribute(i).name);
  }
  out << '\n';
  for (size_t r = 0; r < dataset.num_rows(); ++r) {
    const auto row = dataset.row(r);
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << EscapeCsvField(schema.attribute(i).value_labels[row[i]]);
    }
    out << '\n';
  }
}

absl::Status WriteCsvFile(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(StrCat("cannot write ", path));
  WriteCsv(dataset, out);
  out.flush();
  return out ? absl::OkStatus()
             : absl::DataLossError(StrCat("write failed: ", path));
}

}  // namespace fairaudit
