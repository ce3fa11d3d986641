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

#ifndef FAIRAUDIT_UTIL_RANDOM_H_
#define FAIRAUDIT_UTIL_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fairaudit {

// Every mechanism invocation owns one generator seeded explicitly, so a
// (inputs, seed) pair always reproduces the same output on one toolchain.
using Rng = std::mt19937_64;

// Mixes `stream` into `seed` to obtain an independent sub-seed. Used for
// per-marginal, per-repetition and per-chunk streams.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);
uint64_t DeriveSeed(uint64_t seed, uint64_t stream, uint64_t substream);

// Uniform on [0, 1).
double Uniform01(Rng& rng);

// Uniform integer on [0, n).
int UniformInt(Rng& rng, int n);

// Laplace(0, scale) by inverse CDF.
double SampleLaplace(Rng& rng, double scale);

// Sampler over a finite distribution given by nonnegative weights.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(std::span<const double> weights);

  int Sample(Rng& rng) const;
  size_t size() const { return cumulative_.size(); }

 private:
  std::vector<double> cumulative_;
};

// Hex SHA-256 of the decimal representation of `seed`.
std::string SeedCommitment(uint64_t seed);

}  // namespace fairaudit

#endif  // FAIRAUDIT_UTIL_RANDOM_H_
