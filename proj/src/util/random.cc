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

#include "fairaudit/util/random.h"

#include <openssl/sha.h>

#include <algorithm>
#include <cmath>

#include "fairaudit/util/strings.h"

namespace fairaudit {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(~stream));
}

uint64_t DeriveSeed(uint64_t seed, uint64_t stream, uint64_t substream) {
  return DeriveSeed(DeriveSeed(seed, stream), substream);
}

double Uniform01(Rng& rng) {
  // 53 random mantissa bits.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int UniformInt(Rng& rng, int n) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  return dist(rng);
}

double SampleLaplace(Rng& rng, double scale) {
  double u = Uniform01(rng) - 0.5;
  while (u == -0.5) u = Uniform01(rng) - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

CategoricalSampler::CategoricalSampler(std::span<const double> weights) {
  cumulative_.reserve(weights.size());
  double running = 0;
  for (double w : weights) {
    running += std::max(w, 0.0);
    cumulative_.push_back(running);
  }
}

int CategoricalSampler::Sample(Rng& rng) const {
  const double target = Uniform01(rng) * cumulative_.back();
  const auto it =
      std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  // upper_bound never lands on a zero-weight cell; the clamp only matters
  // for an all-zero weight vector.
  const size_t index = static_cast<size_t>(it - cumulative_.begin());
  return static_cast<int>(std::min(index, cumulative_.size() - 1));
}

std::string SeedCommitment(uint64_t seed) {
  const std::string text = StrCat(seed);
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(),
         digest);
  std::string hex;
  for (unsigned char byte : digest) {
    fmt::format_to(std::back_inserter(hex), "{:02x}", byte);
  }
  return hex;
}

}  // namespace fairaudit
