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

// Internal helpers shared by the solver implementations.

#ifndef BINCOMP_SOLVERS_SEARCH_SUPPORT_H_
#define BINCOMP_SOLVERS_SEARCH_SUPPORT_H_

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "bincomp/branching.h"
#include "bincomp/core.h"
#include "bincomp/gen.h"
#include "bincomp/nogood.h"
#include "bincomp/solvers.h"

namespace bincomp::internal {

// Node counter plus the time and node limits, polled once per node.
class SearchControl {
 public:
  explicit SearchControl(const SolverConfig& cfg);

  // Counts one node. Returns false (and latches the status) once a limit is
  // hit; the node is then not expanded.
  bool Enter();

  bool stopped() const { return status_ != SolveStatus::kOptimal; }
  SolveStatus status() const { return status_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const;

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point deadline_;
  std::optional<std::uint64_t> node_limit_;
  std::uint64_t nodes_ = 0;
  SolveStatus status_ = SolveStatus::kOptimal;
};

// `remaining` minus the items of `taken`. Both in canonical order.
std::vector<Item> RemoveItems(std::span<const Item> remaining,
                              const BinAssignment& taken);

// Items of `a` other than `skip`, in shape order.
std::vector<Item> RestInShapeOrder(const BinAssignment& a,
                                   std::optional<ItemId> skip);

// Fills the bookkeeping fields of a report.
SolveReport Finish(const SearchControl& ctl, Solution solution,
                   std::int64_t objective);

// What a node needs to know to expand its children.
struct ExpandContext {
  std::optional<int> width;
  ValueOrdering ordering = ValueOrdering::kGenerationOrder;
  PruningOptions options;
  // The bin being filled; its seed and bound also describe the host bin of
  // the records this node leaves for its descendants.
  CandidateBin bin;
  std::optional<ItemId> seed_id;
};

// Pulls children from `cursor` in batches, skips the ones the nogood stack
// prunes and calls recurse(child) for the rest. Every processed child, pruned
// or not, becomes a prior sibling for the ones after it: while child i is
// searched, the stack carries one record per earlier sibling j. `stop()` is
// polled between children.
template <typename Recurse, typename Stop>
void ExpandChildren(GenCursor& cursor, const ExpandContext& ctx,
                    NogoodStack& stack, int depth, Recurse&& recurse,
                    Stop&& stop) {
  const bool record = ctx.options.policy != Pruning::kNone;
  std::deque<std::vector<Item>> rests;  // stable addresses for the spans
  ExploreIncremental<BinAssignment>(
      ctx.width, [&](int h) { return cursor.NextBatch(h); },
      [&](std::vector<BinAssignment>& batch) {
        OrderChildren(batch, ctx.ordering);
      },
      [&](BinAssignment& child) {
        if (stop()) return false;
        const bool pruned =
            record && ApplyPruning(child.items(), ctx.bin, stack, ctx.options,
                                   depth + 1);
        if (record) rests.push_back(RestInShapeOrder(child, ctx.seed_id));
        if (!pruned) {
          if (record) {
            NogoodStack::Frame frame;
            frame.reserve(rests.size() - 1);
            for (std::size_t j = 0; j + 1 < rests.size(); ++j) {
              frame.push_back(
                  {rests[j], rests.back(), ctx.bin.seed, ctx.bin.bound});
            }
            stack.Push(std::move(frame));
          }
          recurse(child);
          if (record) stack.Pop();
        }
        return !stop();
      });
}

}  // namespace bincomp::internal

#endif  // BINCOMP_SOLVERS_SEARCH_SUPPORT_H_
