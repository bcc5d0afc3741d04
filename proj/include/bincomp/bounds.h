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

// Exact single-container subsolvers, bounds and construction heuristics.

#ifndef BINCOMP_BOUNDS_H_
#define BINCOMP_BOUNDS_H_

#include <optional>
#include <span>
#include <vector>

#include "bincomp/core.h"

namespace bincomp {

struct KnapsackResult {
  Value best_value = 0;
  std::vector<ItemId> selection;
};

// Exact 0-1 knapsack by depth-first branch-and-bound over items in
// non-increasing profit/weight order with the linear-relaxation bound.
KnapsackResult KnapsackMax(std::span<const Item> items, Weight capacity);

// Surrogate relaxation: one knapsack over the summed capacity.
Value SmkpUpperBound(std::span<const Item> items,
                     std::span<const Weight> capacities);

// Fills containers one after another, each optimally from the items still
// unused. Bins of the result follow `capacities`.
Solution MtmGreedyBound(std::span<const Item> items,
                        std::span<const Weight> capacities);

struct CoverResult {
  Value cost = 0;
  std::vector<ItemId> selection;
};

// Cheapest selection whose weight reaches `quota`; nullopt when the total
// weight falls short. Solved as the knapsack that maximizes the cost of the
// items left out within a capacity of (total weight - quota).
std::optional<CoverResult> MinCostCover(std::span<const Item> items,
                                        Weight quota);

// Sum over quotas of MinCostCover(all items, q); items may be reused across
// bins. nullopt when some quota is uncoverable on its own.
std::optional<Value> MccpL2Bound(std::span<const Item> items,
                                 std::span<const Weight> quotas);

// floor(total weight / quota).
std::int64_t CoveringUpperBound(std::span<const Item> items, Weight quota);

// Largest-first next-fit: fill the open bin until its quota is met, then
// open another. The unfinished tail goes to overflow.
Solution CoveringGreedyLower(std::span<const Item> items, Weight quota);

// Martello-Toth L2 lower bound on the number of bins, never below the
// continuous bound ceil(total / capacity). Items heavier than the capacity
// are not allowed.
std::int64_t BinPackingLowerBound(std::span<const Item> items, Weight capacity);

// Items largest-first, each into the feasible bin with least residual space.
Solution BestFitDecreasing(std::span<const Item> items, Weight capacity);

}  // namespace bincomp

#endif  // BINCOMP_BOUNDS_H_
