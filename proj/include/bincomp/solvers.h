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

// Exact solvers behind one interface:
//
//  * bin completion for each problem kind: depth-first search where every
//    node fixes the complete contents of one bin, children come from
//    GenCursor, and nogood records prune symmetric or dominated branches;
//  * an item-oriented branch-and-bound baseline that places one item per
//    level;
//  * an exhaustive oracle for tiny instances.
//
// A node is one expanded search state (the root counts). Limits are polled
// at every node boundary.

#ifndef BINCOMP_SOLVERS_H_
#define BINCOMP_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "bincomp/core.h"
#include "bincomp/gen.h"
#include "bincomp/nogood.h"

namespace bincomp {

enum class ValueOrdering {
  kMinCardMaxProfit,
  kMinWeight,
  kMinCardMinSum,
  kMinCardMaxWeight,
  kGenerationOrder,
};

std::string_view ToString(ValueOrdering o);
std::optional<ValueOrdering> ParseValueOrdering(std::string_view token);

// Ordering that performed best for each kind.
ValueOrdering DefaultOrdering(ProblemKind kind);

// Sorts children by `ordering`; ties fall back to the lexicographic item-id
// sequence. kGenerationOrder leaves the sequence untouched.
void OrderChildren(std::vector<BinAssignment>& children, ValueOrdering ordering);

// Pass as SolverConfig::h to pull every child of a node at once.
inline constexpr int kUnboundedWidth = 0;

struct SolverConfig {
  Pruning pruning = Pruning::kNogoodDominance;
  // nullopt: DefaultOrdering(kind).
  std::optional<ValueOrdering> ordering;
  // Children generated per batch. nullopt: 100 for bin covering, unbounded
  // otherwise. kUnboundedWidth: unbounded.
  std::optional<int> h;
  double time_limit_s = 300.0;
  std::optional<std::uint64_t> node_limit;
  // Drives the random tie-break between equal MKP bins.
  std::uint64_t rng_seed = 0;
  std::optional<int> ndp_depth_limit;
  // Called with each new incumbent objective.
  std::function<void(std::int64_t)> on_incumbent;
};

enum class SolveStatus { kOptimal, kTimeLimit, kNodeLimit, kInfeasible };

std::string_view ToString(SolveStatus s);

struct SolveReport {
  Solution solution;
  std::int64_t objective = 0;
  std::uint64_t nodes = 0;
  double elapsed_s = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
};

// Effective batch width for a kind (nullopt = unbounded).
std::optional<int> EffectiveWidth(const SolverConfig& cfg, ProblemKind kind);

SolveReport SolveBinPacking(const Instance& inst, const SolverConfig& cfg = {});
SolveReport SolveMkp(const Instance& inst, const SolverConfig& cfg = {});
SolveReport SolveBinCovering(const Instance& inst, const SolverConfig& cfg = {});
SolveReport SolveMccp(const Instance& inst, const SolverConfig& cfg = {});

// Bin completion for the instance's kind.
SolveReport SolveBinCompletion(const Instance& inst,
                               const SolverConfig& cfg = {});

SolveReport SolveItemOriented(const Instance& inst,
                              const SolverConfig& cfg = {});

inline constexpr int kExhaustiveMaxItems = 16;

// Throws std::invalid_argument above kExhaustiveMaxItems items.
SolveReport SolveExhaustive(const Instance& inst);

// Bins an item can go to at one level of the item-oriented search, given the
// current bins. Bins with equal load are interchangeable, so only the first
// of each load is listed. Returns bin indices in trial order; kNewBin opens a
// bin, kDiscard leaves the item out (subset and covering kinds).
inline constexpr int kNewBin = -1;
inline constexpr int kDiscard = -2;
std::vector<int> ItemBranchTargets(ProblemKind kind,
                                   std::span<const Weight> loads,
                                   std::span<const Weight> bounds,
                                   Weight item_weight);

}  // namespace bincomp

#endif  // BINCOMP_SOLVERS_H_
