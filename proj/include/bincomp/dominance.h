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

// Dominance between two bin assignments A and B of the same bin type.
//
// Packing side (bin packing, MKP): A dominates B when the items of B can be
// split into groups, each group packed "inside" a distinct item of A (group
// weight <= item weight; for MKP also group profit <= item profit).
//
// Covering side (bin covering, MCCP): A dominates B when every item of A is
// covered by its own disjoint group of B items (group weight >= item weight;
// for MCCP also group cost >= item cost). B items outside every group are
// discarded.
//
// All predicates are exact. The general ones backtrack over assignments of
// B's items (largest first) to A-item slots, which is exponential in |B| but
// bin cardinalities are small.

#ifndef BINCOMP_DOMINANCE_H_
#define BINCOMP_DOMINANCE_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bincomp/core.h"

namespace bincomp {

enum class DominanceKind {
  kCmtPacking,
  kMtPacking,
  kCovering,
  kMkpPacking,
  kMccpCovering,
};

std::string_view ToString(DominanceKind kind);

// The dominance criterion the solvers use for each problem kind.
DominanceKind DominanceFor(ProblemKind kind);

// slot[k] is the index into A that B[k] is grouped under, or kDiscarded.
// Indices refer to the spans exactly as passed in.
struct DominanceWitness {
  static constexpr int kDiscarded = -1;
  std::vector<int> slot;
};

// One-to-one item mapping; |A| >= |B| and each B item maps to a distinct A
// item at least as heavy.
bool CmtDominates(std::span<const Item> a, std::span<const Item> b);

bool MtDominatesPacking(std::span<const Item> a, std::span<const Item> b);
bool DominatesCovering(std::span<const Item> a, std::span<const Item> b);
bool DominatesMkp(std::span<const Item> a, std::span<const Item> b);
bool DominatesMccp(std::span<const Item> a, std::span<const Item> b);

bool Dominates(DominanceKind kind, std::span<const Item> a,
               std::span<const Item> b);

// Same decision, returning the grouping on success.
std::optional<DominanceWitness> FindDominanceWitness(DominanceKind kind,
                                                     std::span<const Item> a,
                                                     std::span<const Item> b);

inline bool Dominates(DominanceKind kind, const BinAssignment& a,
                      const BinAssignment& b) {
  return Dominates(kind, a.items(), b.items());
}

}  // namespace bincomp

#endif  // BINCOMP_DOMINANCE_H_
