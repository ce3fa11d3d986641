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

#include "fairaudit/mechanisms/grr.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "absl/status/status.h"
#include "fairaudit/util/status_macros.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

absl::Status ValidateGrrArgs(double epsilon, int k) {
  if (!(epsilon > 0)) {
    return absl::InvalidArgumentError(
        StrCat("epsilon must be positive, got ", epsilon));
  }
  if (k < 2) {
    return absl::InvalidArgumentError(
        StrCat("GRR needs at least 2 values, got k=", k));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> GrrRetentionProbability(double epsilon, int k) {
  RETURN_IF_ERROR(ValidateGrrArgs(epsilon, k));
  if (std::isinf(epsilon)) return 1.0;
  // e^eps / (e^eps + k - 1), rewritten so large eps cannot overflow.
  return 1.0 / (1.0 + (k - 1) * std::exp(-epsilon));
}

absl::StatusOr<GrrChannel> GrrChannel::Create(double epsilon, int k) {
  RETURN_IF_ERROR(ValidateGrrArgs(epsilon, k));
  if (std::isinf(epsilon)) return Identity(k);
  const double decay = std::exp(-epsilon);
  const double denom = 1.0 + (k - 1) * decay;
  // q is computed directly rather than as (1-p)/(k-1), which would lose all
  // relative precision once p is close to 1.
  return GrrChannel(k, epsilon, 1.0 / denom, decay / denom);
}

GrrChannel GrrChannel::Identity(int k) {
  return GrrChannel(k, kNoPrivacy, 1, 0);
}

std::vector<double> GrrChannel::Matrix() const {
  std::vector<double> m(static_cast<size_t>(k_) * k_);
  for (int i = 0; i < k_; ++i) {
    for (int o = 0; o < k_; ++o) m[i * k_ + o] = Transition(i, o);
  }
  return m;
}

absl::StatusOr<std::vector<double>> GrrChannel::InverseMatrix() const {
  // M = (p - q) I + q J with p + (k-1) q = 1, so
  // M^-1 = (I - q J) / (p - q).
  const double gap = p_ - q_;
  if (!(std::abs(gap) > 1e-15)) {
    return absl::FailedPreconditionError(
        StrCat("GRR channel with k=", k_, " is singular (p == 1/k)"));
  }
  std::vector<double> inv(static_cast<size_t>(k_) * k_, -q_ / gap);
  for (int i = 0; i < k_; ++i) inv[i * k_ + i] = (1 - q_) / gap;
  return inv;
}

double GrrChannel::MaxLikelihoodRatio() const {
  double worst = 0;
  for (int out = 0; out < k_; ++out) {
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) {
        const double num = Transition(i, out);
        const double den = Transition(j, out);
        if (den == 0) {
          if (num > 0) return kNoPrivacy;
          continue;
        }
        worst = std::max(worst, num / den);
      }
    }
  }
  return worst;
}

int GrrChannel::Apply(int code, Rng& rng) const {
  if (is_identity()) return code;
  if (Uniform01(rng) < p_) return code;
  const int other = UniformInt(rng, k_ - 1);
  return other >= code ? other + 1 : other;
}

std::string_view EpsilonModeName(EpsilonMode mode) {
  return mode == EpsilonMode::kPerColumn ? "per-column" : "total-split";
}

absl::StatusOr<EpsilonMode> ParseEpsilonMode(std::string_view name) {
  if (name == "per-column") return EpsilonMode::kPerColumn;
  if (name == "total-split") return EpsilonMode::kTotalSplit;
  return absl::InvalidArgumentError(
      StrCat("unknown epsilon mode '", name, "'"));
}

double PerColumnEpsilon(double epsilon, EpsilonMode mode, size_t columns) {
  if (mode == EpsilonMode::kPerColumn || columns == 0) return epsilon;
  return epsilon / static_cast<double>(columns);
}

absl::StatusOr<GrrResult> GrrPerturb(const Dataset& dataset,
                                     double epsilon_per_column,
                                     std::span<const std::string> columns,
                                     uint64_t seed) {
  const Schema& schema = dataset.schema();
  std::vector<size_t> selected;
  if (columns.empty()) {
    for (size_t i = 0; i < schema.size(); ++i) selected.push_back(i);
  } else {
    for (const std::string& name : columns) {
      const auto index = schema.IndexOf(name);
      if (!index.has_value()) {
        return absl::InvalidArgumentError(StrCat("unknown attribute ", name));
      }
      if (std::find(selected.begin(), selected.end(), *index) !=
          selected.end()) {
        return absl::InvalidArgumentError(
            StrCat("attribute ", name, " selected twice"));
      }
      selected.push_back(*index);
    }
  }

  // channel_of[c] is null for columns left untouched.
  std::vector<std::optional<GrrChannel>> channel_of(schema.size());
  GrrResult result{Dataset(schema), {}, {}};
  for (size_t c : selected) {
    const AttributeSpec& spec = schema.attribute(c);
    ASSIGN_OR_RETURN(
        GrrChannel channel,
        GrrChannel::Create(epsilon_per_column, spec.cardinality()));
    result.columns.push_back(GrrColumnParams{spec.name, channel.epsilon(),
                                             channel.k(), channel.p()});
    result.ledger.Record(StrCat("grr:", spec.name), channel.epsilon());
    channel_of[c] = channel;
  }

  std::vector<int32_t> codes = dataset.codes();
  Rng rng(seed);
  const size_t width = schema.size();
  for (size_t r = 0; r < dataset.num_rows(); ++r) {
    int32_t* row = codes.data() + r * width;
    for (size_t c = 0; c < width; ++c) {
      if (channel_of[c].has_value()) row[c] = channel_of[c]->Apply(row[c], rng);
    }
  }
  ASSIGN_OR_RETURN(result.dataset, Dataset::Create(schema, std::move(codes)));
  return result;
}

}  // namespace fairaudit
