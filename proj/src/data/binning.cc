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

#include "fairaudit/data/binning.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

std::string FormatCut(double v) { return fmt::sprintf("%g", v); }

}  // namespace

absl::StatusOr<BinningRule> BinningRule::Create(std::string attribute,
                                                std::vector<double> cuts) {
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (!std::isfinite(cuts[i])) {
      return absl::InvalidArgumentError(
          StrCat("binning cuts for ", attribute, " must be finite"));
    }
    if (i > 0 && !(cuts[i] > cuts[i - 1])) {
      return absl::InvalidArgumentError(StrCat("binning cuts for ", attribute,
                                               " must be strictly increasing"));
    }
  }
  return BinningRule(std::move(attribute), std::move(cuts));
}

int BinningRule::Bin(double value) const {
  return static_cast<int>(std::lower_bound(cuts_.begin(), cuts_.end(), value) -
                          cuts_.begin());
}

std::vector<std::string> BinningRule::DefaultLabels() const {
  std::vector<std::string> labels;
  labels.reserve(cuts_.size() + 1);
  std::string lower = "-inf";
  for (double cut : cuts_) {
    const std::string upper = FormatCut(cut);
    labels.push_back(StrCat("(", lower, ",", upper, "]"));
    lower = upper;
  }
  labels.push_back(StrCat("(", lower, ",inf)"));
  return labels;
}

absl::StatusOr<DiscretizeResult> Discretize(std::string attribute,
                                            std::span<const double> column,
                                            int n_bins) {
  if (n_bins < 2) {
    return absl::InvalidArgumentError("n_bins must be at least 2");
  }
  if (column.empty()) {
    return absl::InvalidArgumentError(
        StrCat("cannot discretize empty column ", attribute));
  }
  std::vector<double> sorted(column.begin(), column.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError(
          StrCat("non-finite value in column ", attribute));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const double max_value = sorted.back();
  const double last = static_cast<double>(sorted.size() - 1);

  std::vector<double> cuts;
  for (int i = 1; i < n_bins; ++i) {
    const double h = last * i / n_bins;
    const size_t lo = static_cast<size_t>(std::floor(h));
    const size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double q = sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
    if (q >= max_value) continue;  // would leave an empty top bin
    if (!cuts.empty() && q <= cuts.back()) continue;
    cuts.push_back(q);
  }

  std::vector<std::string> warnings;
  if (cuts.empty()) {
    warnings.push_back(
        StrCat("column ", attribute, " is constant; using a single bin"));
  } else if (static_cast<int>(cuts.size()) + 1 < n_bins) {
    warnings.push_back(StrCat("column ", attribute,
                              ": duplicate quantiles collapsed to ",
                              cuts.size() + 1, " bins"));
  }
  auto rule = BinningRule::Create(std::move(attribute), std::move(cuts));
  if (!rule.ok()) return rule.status();
  return DiscretizeResult{*std::move(rule), std::move(warnings)};
}

}  // namespace fairaudit
