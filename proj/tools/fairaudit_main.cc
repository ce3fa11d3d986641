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

// fairaudit command-line entry point. Every subcommand is a thin wrapper over
// the library; all randomness flows from --seed.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 mechanism error.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fairaudit/bias/theorem_world.h"
#include "fairaudit/data/csv_io.h"
#include "fairaudit/data/schema.h"
#include "fairaudit/data/split.h"
#include "fairaudit/experiment/desk_data.h"
#include "fairaudit/experiment/sweep.h"
#include "fairaudit/metrics/report.h"
#include "fairaudit/model/classifier.h"
#include "fairaudit/model/naive_bayes.h"
#include "fairaudit/protocol/auditor.h"
#include "fairaudit/protocol/messages.h"
#include "fairaudit/protocol/platform.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kMechanismError = 3
};

class CommandFailure : public std::runtime_error {
 public:
  CommandFailure(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void Check(const absl::Status& status, int code) {
  if (!status.ok()) throw CommandFailure(code, status.ToString());
}

template <typename T>
T Take(absl::StatusOr<T> value, int code) {
  Check(value.status(), code);
  return *std::move(value);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw CommandFailure(kDataError, "cannot write " + path);
}

std::vector<Metric> ParseMetrics(const std::string& list) {
  std::vector<Metric> metrics;
  for (std::string_view name : Split(list, ',', /*skip_empty=*/true)) {
    metrics.push_back(Take(ParseMetric(Trim(name)), kUsage));
  }
  if (metrics.empty()) throw CommandFailure(kUsage, "no metrics given");
  return metrics;
}

std::vector<double> ParseGrid(const std::string& list) {
  std::vector<double> grid;
  for (std::string_view item : Split(list, ',', /*skip_empty=*/true)) {
    double value = 0;
    if (!ParseDouble(item, &value)) {
      throw CommandFailure(kUsage, StrCat("bad grid value '", item, "'"));
    }
    grid.push_back(value);
  }
  return grid;
}

constexpr char kAllMetricNames[] =
    "demographic_parity,equalized_odds,equality_of_opportunity";

// Flags shared by several subcommands.
struct Flags {
  std::string dataset;
  std::string schema;
  std::string model;
  std::string mechanism = "grr";
  std::string epsilon = "1";
  std::string epsilon_mode = "per-column";
  int64_t n_prime = 5000;
  uint64_t seed = 0;
  std::string out;
  std::string request;
  std::string release;
  std::string metrics = kAllMetricNames;
  std::string protected_attribute;
  int64_t rows = kDeskDataRows;
  double train_fraction = 0.8;
  bool exclude_protected = false;
  // sweep
  std::string axis = "epsilon";
  std::string grid = "0.5,1,2,5,10";
  int reps = 10;
  std::string mechanisms = "grr,synth,blackbox";
  int threads = 1;
  // bias-demo
  std::string alphas = "0,0.1,0.25,0.5,1";
};

Dataset LoadDataset(const Flags& f) {
  const Schema schema = Take(LoadSchema(f.schema), kDataError);
  return Take(IngestCsv(f.dataset, schema), kDataError);
}

int MakeDeskDataCmd(const Flags& f) {
  const Dataset data = Take(MakeDeskData(f.rows, f.seed), kDataError);
  Check(SaveSchema(data.schema(), f.schema), kDataError);
  Check(WriteCsvFile(data, f.out), kDataError);
  return kOk;
}

int SplitCmd(const Flags& f) {
  const Dataset data = LoadDataset(f);
  const TrainTestSplit split =
      Take(Split(data, f.train_fraction, f.seed), kDataError);
  Check(WriteCsvFile(split.train, f.out + ".train.csv"), kDataError);
  Check(WriteCsvFile(split.test, f.out + ".test.csv"), kDataError);
  return kOk;
}

int TrainCmd(const Flags& f) {
  const Dataset data = LoadDataset(f);
  NaiveBayesOptions options;
  options.use_protected_attribute = !f.exclude_protected;
  std::vector<std::string> warnings;
  const NaiveBayesModel model =
      Take(NaiveBayesModel::Train(data, options, &warnings), kDataError);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  Check(model.Save(f.out), kDataError);
  return kOk;
}

int LabelCmd(const Flags& f) {
  const Dataset data = LoadDataset(f);
  const NaiveBayesModel model =
      Take(NaiveBayesModel::Load(f.model), kDataError);
  Check(WriteCsvFile(Take(Label(model, data), kDataError), f.out), kDataError);
  return kOk;
}

AuditRequest RequestFromFlags(const Flags& f) {
  AuditRequest request;
  request.n_prime = f.n_prime;
  request.protected_attribute = f.protected_attribute;
  request.requested_metrics = ParseMetrics(f.metrics);
  request.mechanism = Take(ParseMechanism(f.mechanism), kUsage);
  request.epsilon = Take(ParseEpsilon(f.epsilon), kUsage);
  request.epsilon_mode = Take(ParseEpsilonMode(f.epsilon_mode), kUsage);
  Check(request.Validate(), kUsage);
  return request;
}

int RequestCmd(const Flags& f) {
  Check(WriteRequest(RequestFromFlags(f), f.out), kDataError);
  return kOk;
}

int PrivatizeCmd(const Flags& f) {
  const AuditRequest request = Take(ReadRequest(f.request), kDataError);
  const Dataset data = LoadDataset(f);
  const NaiveBayesModel model =
      Take(NaiveBayesModel::Load(f.model), kDataError);
  const AuditRelease release =
      Take(PlatformRespond(request, data, model, f.seed), kMechanismError);
  for (const std::string& w : release.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  Check(WriteRelease(release, f.out), kDataError);
  return kOk;
}

int AuditCmd(const Flags& f) {
  const AuditRequest request = Take(ReadRequest(f.request), kDataError);
  const AuditRelease release = Take(ReadRelease(f.release), kDataError);
  const FairnessReport report =
      Take(AuditorEvaluate(release, request), kMechanismError);
  WriteText(f.out, report.Serialize());
  return kOk;
}

int ReferenceCmd(const Flags& f) {
  const Dataset data = LoadDataset(f);
  const NaiveBayesModel model =
      Take(NaiveBayesModel::Load(f.model), kDataError);
  const FairnessReport report = Take(
      ReferenceReport(data, model, ParseMetrics(f.metrics)), kMechanismError);
  WriteText(f.out, report.Serialize());
  return kOk;
}

int BlackboxCmd(const Flags& f) {
  const Schema schema = Take(LoadSchema(f.schema), kDataError);
  const NaiveBayesModel model =
      Take(NaiveBayesModel::Load(f.model), kDataError);
  const FairnessReport report =
      Take(BlackboxAudit({f.n_prime, f.seed}, schema, model,
                         ParseMetrics(f.metrics)),
           kMechanismError);
  WriteText(f.out, report.Serialize());
  return kOk;
}

int BiasDemoCmd(const Flags& f) {
  const std::vector<double> alphas = ParseGrid(f.alphas);
  const std::vector<ShiftRow> rows =
      Take(ShiftDemo(alphas, f.rows, f.seed), kMechanismError);
  WriteText(f.out, ShiftDemoCsv(rows));
  return kOk;
}

int SweepCmd(const Flags& f) {
  const Dataset data = LoadDataset(f);
  SweepConfig config;
  config.axis = Take(ParseSweepAxis(f.axis), kUsage);
  config.grid = ParseGrid(f.grid);
  config.repetitions = f.reps;
  config.base_seed = f.seed;
  config.mechanisms.clear();
  for (std::string_view name : Split(f.mechanisms, ',', true)) {
    config.mechanisms.push_back(Take(ParseSweepMechanism(Trim(name)), kUsage));
  }
  config.metrics = ParseMetrics(f.metrics);
  config.epsilon = Take(ParseEpsilon(f.epsilon), kUsage);
  config.n_prime = f.n_prime;
  config.epsilon_mode = Take(ParseEpsilonMode(f.epsilon_mode), kUsage);
  config.train_fraction = f.train_fraction;
  config.threads = f.threads;
  const SweepResult result = Take(RunSweep(data, config), kMechanismError);
  WriteText(f.out, SweepCsv(result));
  return kOk;
}

// Every long flag can also come from FAIRAUDIT_<FLAG_NAME>.
void AddEnvOverrides(CLI::App& app) {
  for (CLI::Option* option : app.get_options()) {
    const std::string& name = option->get_single_name();
    if (name.empty() || name == "help" || option->get_lnames().empty()) {
      continue;
    }
    std::string env = "FAIRAUDIT_" + name;
    std::transform(env.begin(), env.end(), env.begin(), [](unsigned char c) {
      return c == '-' ? '_' : static_cast<char>(std::toupper(c));
    });
    option->envname(env);
  }
  for (CLI::App* sub : app.get_subcommands({})) AddEnvOverrides(*sub);
}

int Main(int argc, char** argv) {
  CLI::App app{"fairaudit: privacy-preserving fairness audits"};
  app.require_subcommand(1);
  Flags f;
  int (*handler)(const Flags&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*fn)(const Flags&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto seed = [&](CLI::App* s) {
    s->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  };
  auto data_in = [&](CLI::App* s) {
    s->add_option("--dataset", f.dataset, "Input CSV")->required();
    s->add_option("--schema", f.schema, "Schema JSON")->required();
  };
  auto out = [&](CLI::App* s, const char* help) {
    s->add_option("--out", f.out, help)->required();
  };
  auto metrics = [&](CLI::App* s) {
    s->add_option("--metrics", f.metrics, "Comma-separated metrics")
        ->capture_default_str();
  };

  CLI::App* s = add("make-desk-data", "Generate the bundled census-like data",
                    MakeDeskDataCmd);
  s->add_option("--rows", f.rows, "Row count")->capture_default_str();
  s->add_option("--schema", f.schema, "Schema JSON to write")->required();
  out(s, "CSV to write");
  seed(s);

  s = add("split", "Seeded train/test split", SplitCmd);
  data_in(s);
  s->add_option("--train-fraction", f.train_fraction)->capture_default_str();
  out(s, "Prefix for <out>.train.csv and <out>.test.csv");
  seed(s);

  s = add("train", "Train the Naive Bayes model", TrainCmd);
  data_in(s);
  s->add_flag("--exclude-protected", f.exclude_protected,
              "Do not use the protected attribute as an input");
  out(s, "Model JSON to write");

  s = add("label", "Fill the prediction column with the model", LabelCmd);
  data_in(s);
  s->add_option("--model", f.model, "Model JSON")->required();
  out(s, "Labeled CSV to write");

  s = add("request", "Write an audit request", RequestCmd);
  s->add_option("--n-prime", f.n_prime, "Requested release size")
      ->capture_default_str();
  s->add_option("--protected", f.protected_attribute,
                "Protected attribute name")
      ->required();
  metrics(s);
  s->add_option("--mechanism", f.mechanism, "grr or synth")
      ->capture_default_str();
  s->add_option("--epsilon", f.epsilon, "Privacy budget (or inf)")
      ->capture_default_str();
  s->add_option("--epsilon-mode", f.epsilon_mode, "per-column or total-split")
      ->capture_default_str();
  out(s, "Request file to write");

  s = add("privatize", "Platform side: answer a request with a release",
          PrivatizeCmd);
  s->add_option("--request", f.request, "Request file")->required();
  data_in(s);
  s->add_option("--model", f.model, "Model JSON")->required();
  out(s, "Release base path (<out>.csv, <out>.meta.json)");
  seed(s);

  s = add("audit", "Auditor side: evaluate a release", AuditCmd);
  s->add_option("--request", f.request, "Request file")->required();
  s->add_option("--release", f.release, "Release base path")->required();
  out(s, "Report file to write");

  s = add("reference", "Non-private report on labeled data", ReferenceCmd);
  data_in(s);
  s->add_option("--model", f.model, "Model JSON")->required();
  metrics(s);
  out(s, "Report file to write");

  s = add("blackbox", "Uniform-query black-box audit", BlackboxCmd);
  s->add_option("--schema", f.schema, "Schema JSON")->required();
  s->add_option("--model", f.model, "Model JSON")->required();
  s->add_option("--n-prime", f.n_prime, "Query count")->capture_default_str();
  metrics(s);
  out(s, "Report file to write");
  seed(s);

  s = add("bias-demo", "Population-shift construction, analytic vs sampled",
          BiasDemoCmd);
  s->add_option("--alphas", f.alphas, "Comma-separated alphas")
      ->capture_default_str();
  s->add_option("--rows", f.rows, "Samples per population")
      ->capture_default_str();
  out(s, "CSV to write");
  seed(s);

  s = add("sweep", "Error of each mechanism against the reference", SweepCmd);
  data_in(s);
  s->add_option("--axis", f.axis, "epsilon or sample_size")
      ->capture_default_str();
  s->add_option("--grid", f.grid, "Comma-separated axis values")
      ->capture_default_str();
  s->add_option("--reps", f.reps, "Repetitions per grid point")
      ->capture_default_str();
  s->add_option("--mechanisms", f.mechanisms, "Subset of grr,synth,blackbox")
      ->capture_default_str();
  metrics(s);
  s->add_option("--epsilon", f.epsilon, "Fixed epsilon on the n' axis")
      ->capture_default_str();
  s->add_option("--n-prime", f.n_prime, "Fixed n' on the epsilon axis")
      ->capture_default_str();
  s->add_option("--epsilon-mode", f.epsilon_mode, "per-column or total-split")
      ->capture_default_str();
  s->add_option("--train-fraction", f.train_fraction)->capture_default_str();
  s->add_option("--threads", f.threads, "Worker threads")
      ->capture_default_str();
  out(s, "CSV to write");
  seed(s);

  AddEnvOverrides(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return handler(f);
  } catch (const CommandFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  }
}

}  // namespace
}  // namespace fairaudit

int main(int argc, char** argv) { return fairaudit::Main(argc, argv); }
