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

// Exact optimum over every item-to-bin map, evaluated as a dynamic program
// over item subsets so the work is O(m * 3^n) rather than (m+1)^n. Results
// are independent of the search code: no bounds, no dominance.

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bincomp/solvers.h"

namespace bincomp {
namespace {

using Mask = std::uint32_t;

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

struct Tables {
  std::vector<Weight> weight;
  std::vector<Value> value;
};

Tables SubsetSums(const std::vector<Item>& items) {
  const Mask full = (Mask{1} << items.size());
  Tables t{std::vector<Weight>(full, 0), std::vector<Value>(full, 0)};
  for (Mask s = 1; s < full; ++s) {
    const int low = __builtin_ctz(s);
    t.weight[s] = t.weight[s & (s - 1)] + items[low].weight;
    t.value[s] = t.value[s & (s - 1)] + items[low].value;
  }
  return t;
}

BinAssignment FromMask(const std::vector<Item>& items, Mask s) {
  std::vector<Item> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (s & (Mask{1} << i)) out.push_back(items[i]);
  }
  return BinAssignment(std::move(out));
}

// Fewest bins holding every item: g(S) = 1 + min g(S \ T) over feasible T
// containing the lowest item of S.
Solution PackAll(const std::vector<Item>& items, Weight cap) {
  const int n = static_cast<int>(items.size());
  const Mask full = (Mask{1} << n);
  const Tables t = SubsetSums(items);
  std::vector<std::int64_t> g(full, kNone);
  std::vector<Mask> pick(full, 0);
  g[0] = 0;
  for (Mask s = 1; s < full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask others = s ^ low;
    for (Mask sub = others;; sub = (sub - 1) & others) {
      const Mask bin = sub | low;
      if (t.weight[bin] <= cap && g[s ^ bin] != kNone &&
          (g[s] == kNone || g[s ^ bin] + 1 < g[s])) {
        g[s] = g[s ^ bin] + 1;
        pick[s] = bin;
      }
      if (sub == 0) break;
    }
  }
  Solution sol;
  for (Mask s = full - 1; s != 0; s ^= pick[s]) {
    sol.bins.push_back(FromMask(items, pick[s]));
  }
  sol.objective = g[full - 1];
  return sol;
}

// Most covered bins: the lowest item of S either goes unused or joins some
// covering T.
Solution CoverMost(const std::vector<Item>& items, Weight quota) {
  const int n = static_cast<int>(items.size());
  const Mask full = (Mask{1} << n);
  const Tables t = SubsetSums(items);
  std::vector<std::int64_t> f(full, 0);
  std::vector<Mask> pick(full, 0);  // 0: lowest item unused
  for (Mask s = 1; s < full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask others = s ^ low;
    f[s] = f[others];
    for (Mask sub = others;; sub = (sub - 1) & others) {
      const Mask bin = sub | low;
      if (t.weight[bin] >= quota && f[s ^ bin] + 1 > f[s]) {
        f[s] = f[s ^ bin] + 1;
        pick[s] = bin;
      }
      if (sub == 0) break;
    }
  }
  Solution sol;
  Mask unused = 0;
  for (Mask s = full - 1; s != 0;) {
    if (pick[s] == 0) {
      const Mask low = s & (~s + 1);
      unused |= low;
      s ^= low;
    } else {
      sol.bins.push_back(FromMask(items, pick[s]));
      s ^= pick[s];
    }
  }
  sol.overflow = FromMask(items, unused);
  sol.objective = f[full - 1];
  return sol;
}

// Per-container DP: best(i, S) over the items S still available to
// containers i..m-1. Packing maximizes value under capacity, covering
// minimizes cost subject to every quota.
Solution PerContainer(const std::vector<Item>& items,
                      const std::vector<Weight>& bounds, bool packing) {
  const int n = static_cast<int>(items.size());
  const int m = static_cast<int>(bounds.size());
  const Mask full = (Mask{1} << n);
  const Tables t = SubsetSums(items);
  std::vector<std::vector<std::int64_t>> best(
      m + 1, std::vector<std::int64_t>(full, kNone));
  std::vector<std::vector<Mask>> pick(m, std::vector<Mask>(full, 0));
  std::fill(best[m].begin(), best[m].end(), 0);
  for (int i = m - 1; i >= 0; --i) {
    for (Mask s = 0; s < full; ++s) {
      for (Mask bin = s;; bin = (bin - 1) & s) {
        const bool ok = packing ? t.weight[bin] <= bounds[i]
                                : t.weight[bin] >= bounds[i];
        const std::int64_t tail = best[i + 1][s ^ bin];
        if (ok && tail != kNone) {
          const std::int64_t v = tail + t.value[bin];
          if (best[i][s] == kNone ||
              (packing ? v > best[i][s] : v < best[i][s])) {
            best[i][s] = v;
            pick[i][s] = bin;
          }
        }
        if (bin == 0) break;
      }
    }
  }
  Solution sol;
  sol.objective = best[0][full - 1];
  if (sol.objective == kNone) {
    sol.bins.resize(m);
    return sol;
  }
  Mask s = full - 1;
  for (int i = 0; i < m; ++i) {
    sol.bins.push_back(FromMask(items, pick[i][s]));
    s ^= pick[i][s];
  }
  return sol;
}

}  // namespace

SolveReport SolveExhaustive(const Instance& inst) {
  if (inst.num_items() > kExhaustiveMaxItems) {
    throw std::invalid_argument("exhaustive solver takes at most " +
                                std::to_string(kExhaustiveMaxItems) +
                                " items");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Item>& items = inst.items();
  SolveReport r;
  r.nodes = 1;
  switch (inst.kind()) {
    case ProblemKind::kBinPacking:
      for (const Item& it : items) {
        if (it.weight > inst.uniform_bound()) r.status = SolveStatus::kInfeasible;
      }
      if (r.status != SolveStatus::kInfeasible) {
        r.solution = PackAll(items, inst.uniform_bound());
      }
      break;
    case ProblemKind::kBinCovering:
      r.solution = CoverMost(items, inst.uniform_bound());
      break;
    case ProblemKind::kMkp:
      r.solution = PerContainer(items, inst.containers(), true);
      break;
    case ProblemKind::kMccp:
      r.solution = PerContainer(items, inst.containers(), false);
      if (r.solution.objective == kNone) {
        r.solution.objective = 0;
        r.status = SolveStatus::kInfeasible;
      }
      break;
  }
  r.objective = r.solution.objective;
  r.elapsed_s = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return r;
}

}  // namespace bincomp
