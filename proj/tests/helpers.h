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

// Small constructors shared by the unit tests.

#ifndef BINCOMP_TESTS_HELPERS_H_
#define BINCOMP_TESTS_HELPERS_H_

#include <initializer_list>
#include <utility>
#include <vector>

#include "bincomp/core.h"

namespace bincomp::testing {

// Items with ids 0.. in the given order and zero values.
inline std::vector<Item> W(std::initializer_list<Weight> weights) {
  std::vector<Item> out;
  for (Weight w : weights) out.push_back({static_cast<ItemId>(out.size()), w, 0});
  return out;
}

// Items from (weight, value) pairs.
inline std::vector<Item> WV(
    std::initializer_list<std::pair<Weight, Value>> pairs) {
  std::vector<Item> out;
  for (auto [w, v] : pairs) {
    out.push_back({static_cast<ItemId>(out.size()), w, v});
  }
  return out;
}

inline std::vector<Weight> Weights(const std::vector<Item>& items) {
  std::vector<Weight> out;
  for (const Item& it : items) out.push_back(it.weight);
  return out;
}

// Picks items by id.
inline std::vector<Item> Pick(const std::vector<Item>& items,
                              std::initializer_list<ItemId> ids) {
  std::vector<Item> out;
  for (ItemId id : ids) out.push_back(items[id]);
  return out;
}

}  // namespace bincomp::testing

#endif  // BINCOMP_TESTS_HELPERS_H_
