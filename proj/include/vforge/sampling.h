//
// Copyright 2026 The VForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Seeded sampling helpers. std::mt19937_64 output is fully specified by the
// standard, but the std distributions are not, so bounded draws are done here
// to keep datasets bit-identical across standard libraries.

#ifndef VFORGE_SAMPLING_H_
#define VFORGE_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace vforge {

using Rng = std::mt19937_64;

// Uniform integer in [0, n) by rejection sampling; n must be positive.
std::uint64_t UniformIndex(Rng& rng, std::uint64_t n);

// Uniform real in [0, 1) with 53 random bits.
double UniformUnit(Rng& rng);

// Per-item stream seed from a run seed and a stable item id.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view id);

// Fisher-Yates shuffle driven by UniformIndex.
template <typename T>
void Shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(UniformIndex(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// `k` distinct elements chosen uniformly from `items` (all of them when
// k >= size), in selection order.
template <typename T>
std::vector<T> SampleWithoutReplacement(std::vector<T> items, std::size_t k,
                                        Rng& rng) {
  const std::size_t take = k < items.size() ? k : items.size();
  for (std::size_t i = 0; i < take; ++i) {
    const auto j =
        i + static_cast<std::size_t>(UniformIndex(rng, items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(take);
  return items;
}

}  // namespace vforge

#endif  // VFORGE_SAMPLING_H_
