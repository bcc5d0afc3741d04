// Copyright 2026 The bincomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded generator with a fixed output sequence on every platform.
// std::uniform_int_distribution is implementation-defined, so instance files
// generated from a seed would differ between standard libraries.

#ifndef BINCOMP_RNG_H_
#define BINCOMP_RNG_H_

#include <cstdint>
#include <stdexcept>

namespace bincomp {

// SplitMix64 (Steele, Lea, Flood 2014), constants as published.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi]. Rejection sampling keeps it unbiased.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty sampling range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(Next());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
  }

 private:
  std::uint64_t state_;
};

}  // namespace bincomp

#endif  // BINCOMP_RNG_H_
