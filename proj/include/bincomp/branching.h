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

#ifndef BINCOMP_BRANCHING_H_
#define BINCOMP_BRANCHING_H_

#include <limits>
#include <optional>
#include <vector>

namespace bincomp {

// Hybrid incremental branching. Pulls up to `width` children from
// `next_batch`, orders that batch, and visits each child (whose subtree is
// searched fully) before pulling the next batch. nullopt width pulls every
// child at once.
//
//   next_batch(int) -> std::vector<Child>  (fewer than asked = exhausted)
//   order(std::vector<Child>&)
//   visit(Child&) -> bool                  (false aborts the whole loop)
//
// Returns false iff a visit aborted.
template <typename Child, typename NextBatch, typename Order, typename Visit>
bool ExploreIncremental(std::optional<int> width, NextBatch&& next_batch,
                        Order&& order, Visit&& visit) {
  const int h = width ? *width : std::numeric_limits<int>::max();
  for (;;) {
    std::vector<Child> batch = next_batch(h);
    if (batch.empty()) return true;
    order(batch);
    for (Child& child : batch) {
      if (!visit(child)) return false;
    }
    if (static_cast<int>(batch.size()) < h) return true;
  }
}

}  // namespace bincomp

#endif  // BINCOMP_BRANCHING_H_
