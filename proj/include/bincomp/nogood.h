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

// Nogood pruning (NP) and nogood dominance pruning (NDP).
//
// When the search descends into the i-th child of a node, every earlier
// sibling j leaves a record (S_j, S_i): S_j is the earlier sibling's
// assignment and S_i the one being explored, both without the seed item the
// siblings share (if any). Deeper candidates that could be swapped with the
// host bin so that the host ends up holding S_j (NP), or an assignment S_j
// dominates (NDP), lead nowhere new and are skipped.
//
// Records only borrow their item lists. The owner (the solver's node frame)
// must outlive every stack that refers to them.

#ifndef BINCOMP_NOGOOD_H_
#define BINCOMP_NOGOOD_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bincomp/core.h"
#include "bincomp/dominance.h"

namespace bincomp {

enum class Pruning { kNone, kNogood, kNogoodDominance };

std::string_view ToString(Pruning p);
std::optional<Pruning> ParsePruning(std::string_view token);

struct NogoodRecord {
  std::span<const Item> prior;      // S_j, exhausted sibling
  std::span<const Item> taken;      // S_i, sibling on the current path
  std::span<const Item> host_seed;  // shared seed, empty when none
  Weight host_bound = 0;
};

// The bin a candidate assignment is meant for.
struct CandidateBin {
  std::span<const Item> seed;  // candidate's own seed item(s), may be empty
  Weight bound = 0;
  bool packing = true;  // capacity (true) or quota (false)
};

// Orders items by weight, then value (both non-increasing), then id. Multiset
// containment is a linear merge in this order.
bool ShapeLess(const Item& a, const Item& b);
void SortByShape(std::vector<Item>& items);
// True iff `super` contains `sub` as a multiset of (weight, value) pairs.
bool ContainsShapes(std::span<const Item> super, std::span<const Item> sub);

// Candidate contains S_j, and trading S_j for S_i leaves both bins feasible.
bool NpPrunes(std::span<const Item> candidate, const NogoodRecord& rec,
              const CandidateBin& bin);

// S_j dominates the candidate minus its seed, and trading that remainder for
// S_i leaves both bins feasible.
bool NdpPrunes(std::span<const Item> candidate, const NogoodRecord& rec,
               const CandidateBin& bin, DominanceKind kind);

class NogoodStack {
 public:
  using Frame = std::vector<NogoodRecord>;

  void Push(Frame frame) { frames_.push_back(std::move(frame)); }
  void Pop() { frames_.pop_back(); }
  int depth() const { return static_cast<int>(frames_.size()); }
  const std::vector<Frame>& frames() const { return frames_; }
  std::size_t record_count() const;
  bool empty() const { return frames_.empty(); }

 private:
  std::vector<Frame> frames_;
};

struct PruningOptions {
  Pruning policy = Pruning::kNone;
  DominanceKind kind = DominanceKind::kMtPacking;
  // NDP only at candidate depths <= limit; NP still applies below it.
  std::optional<int> ndp_depth_limit;
};

// NP over every record first; NDP only for candidates that survive it.
bool ApplyPruning(std::span<const Item> candidate, const CandidateBin& bin,
                  const NogoodStack& stack, const PruningOptions& options,
                  int candidate_depth = 0);

// Under NP, drops records whose S_j is no longer contained in the remaining
// items. Other policies return the stack unchanged, since a split nogood can
// still prune by dominance.
NogoodStack CompactStack(const NogoodStack& stack,
                         std::span<const Item> remaining, Pruning policy);

}  // namespace bincomp

#endif  // BINCOMP_NOGOOD_H_
