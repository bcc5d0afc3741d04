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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "bincomp/solvers.h"

namespace bincomp {

std::string_view ToString(ValueOrdering o) {
  switch (o) {
    case ValueOrdering::kMinCardMaxProfit:
      return "min-card-max-profit";
    case ValueOrdering::kMinWeight:
      return "min-weight";
    case ValueOrdering::kMinCardMinSum:
      return "min-card-min-sum";
    case ValueOrdering::kMinCardMaxWeight:
      return "min-card-max-weight";
    case ValueOrdering::kGenerationOrder:
      return "generation";
  }
  return "unknown";
}

std::optional<ValueOrdering> ParseValueOrdering(std::string_view token) {
  for (ValueOrdering o :
       {ValueOrdering::kMinCardMaxProfit, ValueOrdering::kMinWeight,
        ValueOrdering::kMinCardMinSum, ValueOrdering::kMinCardMaxWeight,
        ValueOrdering::kGenerationOrder}) {
    if (token == ToString(o)) return o;
  }
  return std::nullopt;
}

ValueOrdering DefaultOrdering(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kBinPacking:
      return ValueOrdering::kMinCardMaxWeight;
    case ProblemKind::kMkp:
      return ValueOrdering::kMinCardMaxProfit;
    case ProblemKind::kBinCovering:
      return ValueOrdering::kMinCardMinSum;
    case ProblemKind::kMccp:
      return ValueOrdering::kMinWeight;
  }
  return ValueOrdering::kGenerationOrder;
}

std::string_view ToString(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kTimeLimit:
      return "time-limit";
    case SolveStatus::kNodeLimit:
      return "node-limit";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

void OrderChildren(std::vector<BinAssignment>& children,
                   ValueOrdering ordering) {
  if (ordering == ValueOrdering::kGenerationOrder || children.size() < 2) {
    return;
  }
  struct Key {
    std::int64_t primary;
    std::int64_t secondary;
    std::vector<ItemId> ids;
  };
  std::vector<Key> keys;
  keys.reserve(children.size());
  for (const BinAssignment& a : children) {
    Key k{0, 0, {}};
    const std::int64_t card = a.size();
    switch (ordering) {
      case ValueOrdering::kMinCardMaxProfit:
        k = {card, -a.value_sum(), {}};
        break;
      case ValueOrdering::kMinWeight:
        k = {a.weight_sum(), 0, {}};
        break;
      case ValueOrdering::kMinCardMinSum:
        k = {card, a.weight_sum(), {}};
        break;
      case ValueOrdering::kMinCardMaxWeight:
        k = {card, -a.weight_sum(), {}};
        break;
      case ValueOrdering::kGenerationOrder:
        break;
    }
    k.ids = a.ids();
    std::sort(k.ids.begin(), k.ids.end());
    keys.push_back(std::move(k));
  }
  std::vector<std::size_t> order(children.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(keys[x].primary, keys[x].secondary, keys[x].ids) <
           std::tie(keys[y].primary, keys[y].secondary, keys[y].ids);
  });
  std::vector<BinAssignment> sorted;
  sorted.reserve(children.size());
  for (std::size_t i : order) sorted.push_back(std::move(children[i]));
  children = std::move(sorted);
}

std::optional<int> EffectiveWidth(const SolverConfig& cfg, ProblemKind kind) {
  if (!cfg.h) {
    if (kind == ProblemKind::kBinCovering) return 100;
    return std::nullopt;
  }
  if (*cfg.h == kUnboundedWidth) return std::nullopt;
  if (*cfg.h < 1) throw std::invalid_argument("h must be >= 1 when bounded");
  return *cfg.h;
}

SolveReport SolveBinCompletion(const Instance& inst, const SolverConfig& cfg) {
  switch (inst.kind()) {
    case ProblemKind::kBinPacking:
      return SolveBinPacking(inst, cfg);
    case ProblemKind::kMkp:
      return SolveMkp(inst, cfg);
    case ProblemKind::kBinCovering:
      return SolveBinCovering(inst, cfg);
    case ProblemKind::kMccp:
      return SolveMccp(inst, cfg);
  }
  throw std::invalid_argument("unknown problem kind");
}

}  // namespace bincomp
