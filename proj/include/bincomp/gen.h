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

// Incremental generation of candidate bin assignments for one bin.
//
// The cursor walks the binary include/exclude tree over the pool (largest
// item first, include branch before exclude branch) and tests each feasible
// leaf against the items left out of it, so memory stays linear in the pool
// size and nothing already emitted is ever stored.
//
// Packing side: emits exactly the maximal, undominated assignments. A leaf is
// dominated when some subset of its items (sum s) can be traded for one
// excluded item x with s <= x and t - s + x <= c. For MKP the subset's profit
// must also not exceed x's profit.
//
// Covering side: emits minimal feasible assignments, screened by a cheap
// swap test. Every undominated assignment is emitted; some dominated ones may
// survive.
//
// Items with identical weight and value are interchangeable: only the
// assignment that takes a prefix of each such run is generated, and an item
// is never considered to dominate its own twin.

#ifndef BINCOMP_GEN_H_
#define BINCOMP_GEN_H_

#include <optional>
#include <span>
#include <vector>

#include "bincomp/core.h"

namespace bincomp {

enum class CoveringScreen {
  // Reject when one member can be replaced by a smaller excluded item.
  kSingleSwap,
  // Also reject when a group of members can be replaced by one excluded item.
  kSubsetSwap,
};

class GenCursor {
 public:
  // Returns nullopt when no assignment can ever be emitted: the required item
  // is heavier than the capacity (packing) or the pool is empty (covering).
  // The pool need not be sorted; `required` must name an item in it.
  static std::optional<GenCursor> Open(
      ProblemKind kind, Weight bound, std::vector<Item> pool,
      std::optional<ItemId> required = std::nullopt,
      CoveringScreen screen = CoveringScreen::kSingleSwap);

  // Next assignment in traversal order, nullopt once exhausted.
  std::optional<BinAssignment> Next();

  // Up to h further assignments; fewer only at exhaustion.
  std::vector<BinAssignment> NextBatch(int h);

  // Drains the cursor.
  std::vector<BinAssignment> All();

  bool packing_side() const { return packing_; }
  Weight bound() const { return bound_; }
  int emitted() const { return emitted_; }
  int pool_size() const { return static_cast<int>(pool_.size()); }
  // Deepest traversal stack seen so far; never exceeds pool_size() + 1.
  int max_stack_depth() const { return max_depth_; }

 private:
  GenCursor() = default;

  struct Frame {
    int index;
    int stage;  // 0: try include, 1: try exclude, 2: unwind
  };

  bool CanInclude(int i) const;
  bool Pruned(int i) const;
  bool AcceptLeaf() const;
  void Push(int index);

  ProblemKind kind_ = ProblemKind::kBinPacking;
  bool packing_ = true;
  bool use_value_ = false;
  CoveringScreen screen_ = CoveringScreen::kSingleSwap;
  Weight bound_ = 0;
  std::vector<Item> pool_;
  int forced_ = -1;
  std::vector<Weight> suffix_weight_;
  // 1 included, 0 excluded, -1 undecided.
  std::vector<signed char> state_;
  std::vector<int> excluded_;  // indices, in decision order
  std::vector<Frame> stack_;
  Weight sum_weight_ = 0;
  int emitted_ = 0;
  int max_depth_ = 0;
};

// Exclusion test on a complete packing-side candidate: true when the
// candidate is dominated, i.e. some subset of `included` (possibly empty) can
// be swapped for one item of `excluded` without exceeding `capacity`. With
// `use_value`, the excluded item's value must also cover the subset's value.
// A single item is never traded for its own twin.
bool PackingDominatedByExclusion(std::span<const Item> included,
                                 std::span<const Item> excluded,
                                 Weight capacity, bool use_value);

// Weight-only form: true iff some subset sum s of `included` and excluded
// weight x satisfy s <= x and t - s + x <= c, where t is the included total.
bool ExclusionTestPacking(Weight t, std::span<const Weight> included,
                          std::span<const Weight> excluded, Weight c);

// Covering-side screen: true when `candidate` should be kept. `excluded` is
// the rest of the pool; `required` (if any) is never swapped out.
bool UndominatedCoveringFilter(std::span<const Item> candidate,
                               std::span<const Item> excluded, Weight quota,
                               bool use_value,
                               std::optional<ItemId> required = std::nullopt,
                               CoveringScreen screen = CoveringScreen::kSingleSwap);

}  // namespace bincomp

#endif  // BINCOMP_GEN_H_
