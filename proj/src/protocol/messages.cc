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

#include "fairaudit/protocol/messages.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fairaudit/data/csv_io.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

constexpr char kReleaseFormat[] = "fairaudit-release-v1";

nlohmann::json EpsilonJson(double epsilon) {
  if (std::isinf(epsilon)) return "inf";
  return epsilon;
}

double EpsilonFromJson(const nlohmann::json& json) {
  return json.is_string() ? kNoPrivacy : json.get<double>();
}

absl::Status WriteText(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(StrCat("cannot write ", path));
  out << text;
  out.flush();
  return out ? absl::OkStatus()
             : absl::DataLossError(StrCat("write failed: ", path));
}

}  // namespace

std::string FormatEpsilon(double epsilon) {
  return std::isinf(epsilon) ? "inf" : fmt::sprintf("%.17g", epsilon);
}

absl::StatusOr<double> ParseEpsilon(std::string_view text) {
  if (text == "inf") return kNoPrivacy;
  double value = 0;
  if (!ParseDouble(text, &value)) {
    return absl::InvalidArgumentError(StrCat("bad epsilon '", text, "'"));
  }
  return value;
}

std::string_view MechanismName(MechanismKind kind) {
  return kind == MechanismKind::kGrr ? "grr" : "synth";
}

absl::StatusOr<MechanismKind> ParseMechanism(std::string_view name) {
  if (name == "grr") return MechanismKind::kGrr;
  if (name == "synth") return MechanismKind::kSynth;
  return absl::InvalidArgumentError(StrCat("unknown mechanism '", name, "'"));
}

absl::Status AuditRequest::Validate() const {
  if (n_prime < 1) {
    return absl::InvalidArgumentError("request rejected: n_prime must be >= 1");
  }
  if (!(epsilon > 0)) {
    return absl::InvalidArgumentError(
        StrCat("request rejected: epsilon must be positive, got ", epsilon));
  }
  if (protected_attribute.empty()) {
    return absl::InvalidArgumentError(
        "request rejected: protected attribute not named");
  }
  if (requested_metrics.empty()) {
    return absl::InvalidArgumentError("request rejected: no metrics requested");
  }
  return absl::OkStatus();
}

bool AuditRequest::NeedsGroundTruth() const {
  for (Metric m : requested_metrics) {
    if (RequiresGroundTruth(m)) return true;
  }
  return false;
}

std::string AuditRequest::Serialize() const {
  std::vector<std::string_view> metrics;
  for (Metric m : requested_metrics) metrics.push_back(MetricName(m));
  return StrCat("n_prime=", n_prime, "\n",
                "protected_attribute=", protected_attribute, "\n",
                "metrics=", fmt::format("{}", fmt::join(metrics, ",")), "\n",
                "mechanism=", MechanismName(mechanism), "\n",
                "epsilon=", FormatEpsilon(epsilon), "\n",
                "epsilon_mode=", EpsilonModeName(epsilon_mode), "\n");
}

absl::StatusOr<AuditRequest> AuditRequest::Parse(std::string_view text) {
  AuditRequest request;
  bool saw_n = false, saw_attr = false, saw_eps = false, saw_mech = false;
  for (std::string_view line : Split(text, '\n', true)) {
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::pair<std::string_view, std::string_view> kv =
        SplitOnce(line, '=');
    const std::string_view key = Trim(kv.first);
    const std::string_view value = Trim(kv.second);
    if (key == "n_prime") {
      if (!ParseInt64(value, &request.n_prime)) {
        return absl::InvalidArgumentError("bad n_prime");
      }
      saw_n = true;
    } else if (key == "protected_attribute") {
      request.protected_attribute = std::string(value);
      saw_attr = true;
    } else if (key == "metrics") {
      request.requested_metrics.clear();
      for (std::string_view name : Split(value, ',', true)) {
        ASSIGN_OR_RETURN(const Metric m, ParseMetric(Trim(name)));
        request.requested_metrics.push_back(m);
      }
    } else if (key == "mechanism") {
      ASSIGN_OR_RETURN(request.mechanism, ParseMechanism(value));
      saw_mech = true;
    } else if (key == "epsilon") {
      ASSIGN_OR_RETURN(request.epsilon, ParseEpsilon(value));
      saw_eps = true;
    } else if (key == "epsilon_mode") {
      ASSIGN_OR_RETURN(request.epsilon_mode, ParseEpsilonMode(value));
    } else {
      return absl::InvalidArgumentError(
          StrCat("unknown request key '", key, "'"));
    }
  }
  if (!saw_n || !saw_attr || !saw_eps || !saw_mech) {
    return absl::InvalidArgumentError(
        "request needs n_prime, protected_attribute, mechanism and epsilon");
  }
  return request;
}

std::string AuditRelease::MetadataText() const {
  nlohmann::json meta;
  meta["format"] = kReleaseFormat;
  meta["schema"] = SchemaToJson(dataset.schema());
  meta["rows"] = dataset.num_rows();
  meta["mechanism"] = std::string(MechanismName(mechanism));
  meta["requested_epsilon"] = EpsilonJson(requested_epsilon);
  meta["epsilon_mode"] = std::string(EpsilonModeName(epsilon_mode));
  if (mechanism == MechanismKind::kGrr) {
    nlohmann::json columns = nlohmann::json::array();
    for (const GrrColumnParams& c : grr_columns) {
      columns.push_back({{"attribute", c.attribute},
                         {"epsilon", EpsilonJson(c.epsilon)},
                         {"k", c.k},
                         {"p", c.p}});
    }
    meta["grr_columns"] = std::move(columns);
  }
  if (synth_plan.has_value()) meta["synth_plan"] = synth_plan->ToJson();
  meta["ledger"] = ledger.ToJson();
  meta["platform_id"] = platform_id;
  meta["seed_commitment"] = seed_commitment;
  meta["warnings"] = warnings;
  return meta.dump(2) + "\n";
}

std::string AuditRelease::CsvText() const {
  std::ostringstream out;
  WriteCsv(dataset, out);
  return out.str();
}

absl::StatusOr<AuditRelease> AuditRelease::Parse(
    std::string_view csv_text, std::string_view metadata_text) {
  nlohmann::json meta = nlohmann::json::parse(metadata_text, nullptr, false);
  if (meta.is_discarded() || !meta.is_object()) {
    return absl::InvalidArgumentError("release metadata is not valid JSON");
  }
  try {
    if (meta.at("format") != kReleaseFormat) {
      return absl::InvalidArgumentError("unsupported release format");
    }
    ASSIGN_OR_RETURN(Schema schema, SchemaFromJson(meta.at("schema")));
    ASSIGN_OR_RETURN(Dataset dataset, EncodeCsv(csv_text, schema));
    if (dataset.num_rows() != meta.at("rows").get<size_t>()) {
      return absl::DataLossError("release row count does not match metadata");
    }
    AuditRelease release{.dataset = std::move(dataset)};
    ASSIGN_OR_RETURN(release.mechanism,
                     ParseMechanism(meta.at("mechanism").get<std::string>()));
    release.requested_epsilon = EpsilonFromJson(meta.at("requested_epsilon"));
    ASSIGN_OR_RETURN(
        release.epsilon_mode,
        ParseEpsilonMode(meta.at("epsilon_mode").get<std::string>()));
    if (meta.contains("grr_columns")) {
      for (const nlohmann::json& c : meta["grr_columns"]) {
        release.grr_columns.push_back(
            GrrColumnParams{c.at("attribute").get<std::string>(),
                            EpsilonFromJson(c.at("epsilon")),
                            c.at("k").get<int>(), c.at("p").get<double>()});
      }
    }
    if (meta.contains("synth_plan")) {
      ASSIGN_OR_RETURN(MarginalPlan plan,
                       MarginalPlan::FromJson(meta["synth_plan"]));
      release.synth_plan = std::move(plan);
    }
    ASSIGN_OR_RETURN(release.ledger, BudgetLedger::FromJson(meta.at("ledger")));
    release.platform_id = meta.at("platform_id").get<std::string>();
    release.seed_commitment = meta.at("seed_commitment").get<std::string>();
    release.warnings = meta.at("warnings").get<std::vector<std::string>>();
    return release;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        StrCat("malformed release metadata: ", e.what()));
  }
}

absl::Status WriteRequest(const AuditRequest& request,
                          const std::string& path) {
  return WriteText(path, request.Serialize());
}

absl::StatusOr<AuditRequest> ReadRequest(const std::string& path) {
  ASSIGN_OR_RETURN(const std::string text, ReadFile(path));
  return AuditRequest::Parse(text);
}

absl::Status WriteRelease(const AuditRelease& release,
                          const std::string& base) {
  RETURN_IF_ERROR(WriteText(base + ".csv", release.CsvText()));
  return WriteText(base + ".meta.json", release.MetadataText());
}

absl::StatusOr<AuditRelease> ReadRelease(const std::string& base) {
  ASSIGN_OR_RETURN(const std::string csv, ReadFile(base + ".csv"));
  ASSIGN_OR_RETURN(const std::string meta, ReadFile(base + ".meta.json"));
  return AuditRelease::Parse(csv, meta);
}

}  // namespace fairaudit
