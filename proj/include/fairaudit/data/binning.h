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

#ifndef FAIRAUDIT_DATA_BINNING_H_
#define FAIRAUDIT_DATA_BINNING_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace fairaudit {

// Maps a real value to a bin code. Bin i covers (cuts[i-1], cuts[i]]; the
// first bin is unbounded below and the last unbounded above.
class BinningRule {
 public:
  // Cut points must be finite and strictly increasing.
  static absl::StatusOr<BinningRule> Create(std::string attribute,
                                            std::vector<double> cuts);

  const std::string& attribute() const { return attribute_; }
  const std::vector<double>& cuts() const { return cuts_; }
  int bin_count() const { return static_cast<int>(cuts_.size()) + 1; }

  int Bin(double value) const;

  // Human-readable interval labels, e.g. "(-inf,30]", "(30,50]", "(50,inf)".
  std::vector<std::string> DefaultLabels() const;

  bool operator==(const BinningRule&) const = default;

 private:
  BinningRule(std::string attribute, std::vector<double> cuts)
      : attribute_(std::move(attribute)), cuts_(std::move(cuts)) {}

  std::string attribute_;
  std::vector<double> cuts_;
};

struct DiscretizeResult {
  BinningRule rule;
  std::vector<std::string> warnings;
};

// Quantile binning: cut i sits at the empirical quantile i/n_bins (linear
// interpolation between order statistics). Duplicate cuts and cuts at or
// above the column maximum are dropped, so fewer than n_bins bins may come
// back; a constant column yields a single bin and a warning.
absl::StatusOr<DiscretizeResult> Discretize(std::string attribute,
                                            std::span<const double> column,
                                            int n_bins);

inline constexpr int kDefaultBinCount = 8;

}  // namespace fairaudit

#endif  // FAIRAUDIT_DATA_BINNING_H_
