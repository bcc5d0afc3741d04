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

#include "bincomp/bounds.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bincomp {
namespace {

class KnapsackBranchAndBound {
 public:
  KnapsackBranchAndBound(std::span<const Item> items, Weight capacity)
      : capacity_(capacity) {
    for (const Item& it : items) {
      if (it.weight <= capacity && it.value > 0) items_.push_back(it);
    }
    std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
      // a.value / a.weight > b.value / b.weight without division.
      const __int128 lhs = static_cast<__int128>(a.value) * b.weight;
      const __int128 rhs = static_cast<__int128>(b.value) * a.weight;
      if (lhs != rhs) return lhs > rhs;
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.id < b.id;
    });
    taken_.assign(items_.size(), false);
  }

  KnapsackResult Solve() {
    root_bound_ = Bound(0, capacity_);
    Search(0, capacity_, 0);
    KnapsackResult r;
    r.best_value = best_;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (best_taken_.size() == items_.size() && best_taken_[i]) {
        r.selection.push_back(items_[i].id);
      }
    }
    std::sort(r.selection.begin(), r.selection.end());
    return r;
  }

 private:
  // Dantzig bound on items k.. with residual capacity.
  Value Bound(std::size_t k, Weight cap) const {
    Value v = 0;
    for (std::size_t i = k; i < items_.size(); ++i) {
      if (items_[i].weight <= cap) {
        cap -= items_[i].weight;
        v += items_[i].value;
      } else {
        v += static_cast<Value>(static_cast<__int128>(items_[i].value) * cap /
                                items_[i].weight);
        break;
      }
    }
    return v;
  }

  void Search(std::size_t k, Weight cap, Value value) {
    if (done_) return;
    if (value > best_ || best_taken_.empty()) {
      best_ = value;
      best_taken_ = taken_;
      if (best_ == root_bound_) {
        done_ = true;
        return;
      }
    }
    if (k == items_.size()) return;
    if (value + Bound(k, cap) <= best_) return;
    if (items_[k].weight <= cap) {
      taken_[k] = true;
      Search(k + 1, cap - items_[k].weight, value + items_[k].value);
      taken_[k] = false;
      if (done_) return;
    }
    Search(k + 1, cap, value);
  }

  Weight capacity_;
  std::vector<Item> items_;
  std::vector<bool> taken_;
  std::vector<bool> best_taken_;
  Value best_ = 0;
  Value root_bound_ = 0;
  bool done_ = false;
};

}  // namespace

KnapsackResult KnapsackMax(std::span<const Item> items, Weight capacity) {
  if (capacity <= 0) return {};
  return KnapsackBranchAndBound(items, capacity).Solve();
}

Value SmkpUpperBound(std::span<const Item> items,
                     std::span<const Weight> capacities) {
  const Weight total =
      std::accumulate(capacities.begin(), capacities.end(), Weight{0});
  return KnapsackMax(items, total).best_value;
}

Solution MtmGreedyBound(std::span<const Item> items,
                        std::span<const Weight> capacities) {
  std::vector<Item> left(items.begin(), items.end());
  Solution sol;
  for (Weight c : capacities) {
    KnapsackResult r = KnapsackMax(left, c);
    std::vector<Item> chosen;
    std::vector<Item> rest;
    for (const Item& it : left) {
      const bool picked = std::binary_search(r.selection.begin(),
                                             r.selection.end(), it.id);
      (picked ? chosen : rest).push_back(it);
    }
    sol.objective += r.best_value;
    sol.bins.emplace_back(std::move(chosen));
    left = std::move(rest);
  }
  return sol;
}

std::optional<CoverResult> MinCostCover(std::span<const Item> items,
                                        Weight quota) {
  if (quota < 1) throw std::invalid_argument("quota must be >= 1");
  const Weight total = WeightSum(items);
  if (total < quota) return std::nullopt;
  KnapsackResult left_out = KnapsackMax(items, total - quota);
  CoverResult r;
  r.cost = ValueSum(items) - left_out.best_value;
  for (const Item& it : items) {
    if (!std::binary_search(left_out.selection.begin(),
                            left_out.selection.end(), it.id)) {
      r.selection.push_back(it.id);
    }
  }
  std::sort(r.selection.begin(), r.selection.end());
  return r;
}

std::optional<Value> MccpL2Bound(std::span<const Item> items,
                                 std::span<const Weight> quotas) {
  std::map<Weight, Value> memo;
  Value total = 0;
  for (Weight q : quotas) {
    auto it = memo.find(q);
    if (it == memo.end()) {
      std::optional<CoverResult> r = MinCostCover(items, q);
      if (!r) return std::nullopt;
      it = memo.emplace(q, r->cost).first;
    }
    total += it->second;
  }
  return total;
}

std::int64_t CoveringUpperBound(std::span<const Item> items, Weight quota) {
  return WeightSum(items) / quota;
}

Solution CoveringGreedyLower(std::span<const Item> items, Weight quota) {
  std::vector<Item> sorted(items.begin(), items.end());
  SortCanonical(sorted);
  Solution sol;
  BinAssignment open;
  for (const Item& it : sorted) {
    open.Add(it);
    if (open.weight_sum() >= quota) {
      sol.bins.push_back(std::move(open));
      open = BinAssignment();
    }
  }
  sol.overflow = std::move(open);
  sol.objective = static_cast<std::int64_t>(sol.bins.size());
  return sol;
}

std::int64_t BinPackingLowerBound(std::span<const Item> items,
                                  Weight capacity) {
  if (items.empty()) return 0;
  const Weight total = WeightSum(items);
  std::int64_t best = (total + capacity - 1) / capacity;

  std::vector<Weight> thresholds{0};
  for (const Item& it : items) {
    if (it.weight > capacity) {
      throw std::invalid_argument("item heavier than the bin capacity");
    }
    if (2 * it.weight <= capacity) thresholds.push_back(it.weight);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  for (Weight k : thresholds) {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    Weight sum2 = 0;
    Weight sum3 = 0;
    for (const Item& it : items) {
      const Weight w = it.weight;
      if (w > capacity - k) {
        ++n1;
      } else if (2 * w > capacity) {
        ++n2;
        sum2 += w;
      } else if (w >= k) {
        sum3 += w;
      }
    }
    // Small items beyond the free space left in the medium-item bins.
    const Weight spill = sum3 - (n2 * capacity - sum2);
    const std::int64_t extra = spill > 0 ? (spill + capacity - 1) / capacity : 0;
    best = std::max(best, n1 + n2 + extra);
  }
  return best;
}

Solution BestFitDecreasing(std::span<const Item> items, Weight capacity) {
  std::vector<Item> sorted(items.begin(), items.end());
  SortCanonical(sorted);
  Solution sol;
  for (const Item& it : sorted) {
    if (it.weight > capacity) {
      throw std::invalid_argument("item heavier than the bin capacity");
    }
    int best = -1;
    Weight best_residual = 0;
    for (std::size_t b = 0; b < sol.bins.size(); ++b) {
      const Weight residual = capacity - sol.bins[b].weight_sum();
      if (it.weight <= residual && (best < 0 || residual < best_residual)) {
        best = static_cast<int>(b);
        best_residual = residual;
      }
    }
    if (best < 0) {
      sol.bins.emplace_back();
      best = static_cast<int>(sol.bins.size()) - 1;
    }
    sol.bins[best].Add(it);
  }
  sol.objective = static_cast<std::int64_t>(sol.bins.size());
  return sol;
}

}  // namespace bincomp
