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

#include "bincomp/gen.h"

#include <algorithm>
#include <stdexcept>

namespace bincomp {
namespace {

struct SubsetScan {
  std::span<const Item> included;
  std::span<const Item> excluded;
  Weight slack;
  Weight max_excluded;
  bool use_value;

  // True when the subset {included[chosen...]} with the given sums can be
  // traded for some excluded item.
  bool Tradeable(Weight s, Value sv, int count, int single) const {
    for (const Item& x : excluded) {
      if (x.weight < s || x.weight - s > slack) continue;
      if (use_value && x.value < sv) continue;
      if (count == 1 && SameShape(included[single], x)) continue;
      return true;
    }
    return false;
  }

  bool Search(std::size_t k, Weight s, Value sv, int count) const {
    for (std::size_t j = k; j < included.size(); ++j) {
      const Weight ns = s + included[j].weight;
      if (ns > max_excluded) continue;
      const Value nsv = sv + included[j].value;
      if (Tradeable(ns, nsv, count + 1, static_cast<int>(j))) return true;
      if (Search(j + 1, ns, nsv, count + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool PackingDominatedByExclusion(std::span<const Item> included,
                                 std::span<const Item> excluded,
                                 Weight capacity, bool use_value) {
  if (excluded.empty()) return false;
  const Weight slack = capacity - WeightSum(included);
  Weight max_excluded = 0;
  for (const Item& x : excluded) {
    // Empty subset: x still fits, so the candidate is not maximal.
    if (x.weight <= slack) return true;
    max_excluded = std::max(max_excluded, x.weight);
  }
  SubsetScan scan{included, excluded, slack, max_excluded, use_value};
  return scan.Search(0, 0, 0, 0);
}

bool ExclusionTestPacking(Weight t, std::span<const Weight> included,
                          std::span<const Weight> excluded, Weight c) {
  // Items of distinct ids so twin screening applies only to equal weights.
  std::vector<Item> inc;
  std::vector<Item> exc;
  ItemId next = 0;
  for (Weight w : included) inc.push_back({next++, w, 0});
  for (Weight w : excluded) exc.push_back({next++, w, 0});
  if (WeightSum(inc) != t) {
    throw std::invalid_argument("t must equal the included weight sum");
  }
  return PackingDominatedByExclusion(inc, exc, c, /*use_value=*/false);
}

bool UndominatedCoveringFilter(std::span<const Item> candidate,
                               std::span<const Item> excluded, Weight quota,
                               bool use_value, std::optional<ItemId> required,
                               CoveringScreen screen) {
  const Weight t = WeightSum(candidate);
  auto no_worse = [&](const Item& x, Weight gw, Value gv) {
    return x.weight <= gw && (!use_value || x.value <= gv);
  };
  for (const Item& a : candidate) {
    if (required && a.id == *required) continue;
    for (const Item& x : excluded) {
      if (SameShape(a, x) || (!use_value && x.weight == a.weight)) continue;
      if (no_worse(x, a.weight, a.value) && t - a.weight + x.weight >= quota) {
        return false;
      }
    }
  }
  if (screen == CoveringScreen::kSingleSwap) return true;

  // Groups of two or more members traded for one excluded item.
  std::vector<Item> members;
  for (const Item& a : candidate) {
    if (!(required && a.id == *required)) members.push_back(a);
  }
  const int m = static_cast<int>(members.size());
  if (m > 20) return true;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons done above
    Weight gw = 0;
    Value gv = 0;
    for (int j = 0; j < m; ++j) {
      if (mask & (1u << j)) {
        gw += members[j].weight;
        gv += members[j].value;
      }
    }
    for (const Item& x : excluded) {
      if (no_worse(x, gw, gv) && t - gw + x.weight >= quota) return false;
    }
  }
  return true;
}

std::optional<GenCursor> GenCursor::Open(ProblemKind kind, Weight bound,
                                         std::vector<Item> pool,
                                         std::optional<ItemId> required,
                                         CoveringScreen screen) {
  GenCursor cur;
  cur.kind_ = kind;
  cur.packing_ = IsPackingKind(kind);
  cur.use_value_ = kind == ProblemKind::kMkp || kind == ProblemKind::kMccp;
  cur.screen_ = screen;
  cur.bound_ = bound;
  if (!cur.use_value_) {
    for (Item& it : pool) it.value = 0;
  }
  SortCanonical(pool);
  // Twins must be adjacent for the prefix rule, so values break weight ties.
  std::stable_sort(pool.begin(), pool.end(), [](const Item& a, const Item& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.value > b.value;
  });
  if (required) {
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](const Item& x) { return x.id == *required; });
    if (it == pool.end()) {
      throw std::invalid_argument("required item is not in the pool");
    }
    // The required item leads its run of twins so the prefix rule holds.
    auto first = std::find_if(pool.begin(), it,
                              [&](const Item& x) { return SameShape(x, *it); });
    std::rotate(first, it, it + 1);
    cur.forced_ = static_cast<int>(first - pool.begin());
    if (cur.packing_ && first->weight > bound) return std::nullopt;
  }
  if (!cur.packing_ && pool.empty() && bound > 0) return std::nullopt;
  cur.pool_ = std::move(pool);

  const int n = cur.pool_size();
  cur.suffix_weight_.assign(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    cur.suffix_weight_[i] = cur.suffix_weight_[i + 1] + cur.pool_[i].weight;
  }
  cur.state_.assign(n, -1);
  cur.stack_.reserve(n + 1);
  cur.Push(0);
  return cur;
}

void GenCursor::Push(int index) {
  stack_.push_back({index, 0});
  max_depth_ = std::max(max_depth_, static_cast<int>(stack_.size()));
}

bool GenCursor::CanInclude(int i) const {
  const Item& it = pool_[i];
  if (i > 0 && state_[i - 1] == 0 && SameShape(pool_[i - 1], it)) return false;
  if (packing_) return it.weight <= bound_ - sum_weight_;
  // Once the quota is met any further (smaller) item makes the set
  // non-minimal.
  return sum_weight_ < bound_;
}

bool GenCursor::Pruned(int i) const {
  if (packing_) {
    if (excluded_.empty()) return false;
    // The most recently excluded item is the lightest excluded so far; if it
    // fits even after taking everything left, no leaf below is maximal.
    const Weight lightest = pool_[excluded_.back()].weight;
    return lightest <= bound_ - sum_weight_ - suffix_weight_[i];
  }
  return sum_weight_ < bound_ && sum_weight_ + suffix_weight_[i] < bound_;
}

bool GenCursor::AcceptLeaf() const {
  std::vector<Item> in;
  std::vector<Item> out;
  for (int i = 0; i < pool_size(); ++i) {
    (state_[i] == 1 ? in : out).push_back(pool_[i]);
  }
  if (packing_) {
    return !PackingDominatedByExclusion(in, out, bound_, use_value_);
  }
  if (sum_weight_ < bound_) return false;
  std::optional<ItemId> required;
  if (forced_ >= 0) required = pool_[forced_].id;
  return UndominatedCoveringFilter(in, out, bound_, use_value_, required,
                                   screen_);
}

std::optional<BinAssignment> GenCursor::Next() {
  const int n = pool_size();
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const int i = f.index;
    if (i == n) {
      stack_.pop_back();
      if (AcceptLeaf()) {
        std::vector<Item> in;
        for (int j = 0; j < n; ++j) {
          if (state_[j] == 1) in.push_back(pool_[j]);
        }
        ++emitted_;
        return BinAssignment(std::move(in));
      }
      continue;
    }
    switch (f.stage) {
      case 0:
        f.stage = 1;
        if (Pruned(i)) {
          f.stage = 2;
          continue;
        }
        if (CanInclude(i)) {
          state_[i] = 1;
          sum_weight_ += pool_[i].weight;
          Push(i + 1);
        }
        continue;
      case 1:
        f.stage = 2;
        if (state_[i] == 1) {
          state_[i] = -1;
          sum_weight_ -= pool_[i].weight;
        }
        if (i != forced_) {
          state_[i] = 0;
          excluded_.push_back(i);
          Push(i + 1);
        }
        continue;
      default:
        if (state_[i] == 0) {
          excluded_.pop_back();
        } else if (state_[i] == 1) {
          sum_weight_ -= pool_[i].weight;
        }
        state_[i] = -1;
        stack_.pop_back();
        continue;
    }
  }
  return std::nullopt;
}

std::vector<BinAssignment> GenCursor::NextBatch(int h) {
  if (h < 1) throw std::invalid_argument("batch width must be >= 1");
  std::vector<BinAssignment> out;
  while (static_cast<int>(out.size()) < h) {
    std::optional<BinAssignment> a = Next();
    if (!a) break;
    out.push_back(std::move(*a));
  }
  return out;
}

std::vector<BinAssignment> GenCursor::All() {
  std::vector<BinAssignment> out;
  while (std::optional<BinAssignment> a = Next()) out.push_back(std::move(*a));
  return out;
}

}  // namespace bincomp
