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

#include "bincomp/dominance.h"

#include <algorithm>
#include <numeric>

namespace bincomp {
namespace {

// Indices of `items` sorted by non-increasing weight, then value.
std::vector<int> HeaviestFirst(std::span<const Item> items) {
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (items[x].weight != items[y].weight) {
      return items[x].weight > items[y].weight;
    }
    return items[x].value > items[y].value;
  });
  return order;
}

// Packs B's items into A's items treated as sub-bins.
class PackingMatcher {
 public:
  PackingMatcher(std::span<const Item> a, std::span<const Item> b,
                 bool with_value)
      : a_(a), b_(b), with_value_(with_value), slot_(b.size(), -1) {
    b_order_ = HeaviestFirst(b);
    // Lightest A items first so the smallest sufficient slot is tried first.
    a_order_ = HeaviestFirst(a);
    std::reverse(a_order_.begin(), a_order_.end());
    res_w_.resize(a.size());
    res_v_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      res_w_[i] = a[i].weight;
      res_v_[i] = a[i].value;
    }
    suffix_w_.assign(b.size() + 1, 0);
    suffix_v_.assign(b.size() + 1, 0);
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) {
      suffix_w_[k] = suffix_w_[k + 1] + b[b_order_[k]].weight;
      suffix_v_[k] = suffix_v_[k + 1] + b[b_order_[k]].value;
    }
    total_res_w_ = WeightSum(a);
    total_res_v_ = ValueSum(a);
  }

  bool Run() { return Place(0); }
  const std::vector<int>& slots() const { return slot_; }

 private:
  bool Place(std::size_t k) {
    if (k == b_order_.size()) return true;
    if (suffix_w_[k] > total_res_w_) return false;
    if (with_value_ && suffix_v_[k] > total_res_v_) return false;
    const Item& item = b_[b_order_[k]];
    // Slots with identical residuals are interchangeable.
    std::vector<std::pair<Weight, Value>> tried;
    for (int s : a_order_) {
      if (item.weight > res_w_[s]) continue;
      if (with_value_ && item.value > res_v_[s]) continue;
      const std::pair<Weight, Value> key{res_w_[s], with_value_ ? res_v_[s] : 0};
      if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
      tried.push_back(key);
      res_w_[s] -= item.weight;
      res_v_[s] -= item.value;
      total_res_w_ -= item.weight;
      total_res_v_ -= item.value;
      slot_[b_order_[k]] = s;
      if (Place(k + 1)) return true;
      res_w_[s] += item.weight;
      res_v_[s] += item.value;
      total_res_w_ += item.weight;
      total_res_v_ += item.value;
      slot_[b_order_[k]] = -1;
    }
    return false;
  }

  std::span<const Item> a_;
  std::span<const Item> b_;
  bool with_value_;
  std::vector<int> b_order_;
  std::vector<int> a_order_;
  std::vector<Weight> res_w_;
  std::vector<Value> res_v_;
  std::vector<Weight> suffix_w_;
  std::vector<Value> suffix_v_;
  Weight total_res_w_ = 0;
  Value total_res_v_ = 0;
  std::vector<int> slot_;
};

// Covers each A item with a disjoint group of B items; spare B items are
// discarded.
class CoveringMatcher {
 public:
  CoveringMatcher(std::span<const Item> a, std::span<const Item> b,
                  bool with_value)
      : a_(a),
        b_(b),
        with_value_(with_value),
        slot_(b.size(), DominanceWitness::kDiscarded) {
    b_order_ = HeaviestFirst(b);
    need_w_.resize(a.size());
    need_v_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      need_w_[i] = a[i].weight;
      need_v_[i] = with_value ? a[i].value : 0;
    }
    suffix_w_.assign(b.size() + 1, 0);
    suffix_v_.assign(b.size() + 1, 0);
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) {
      suffix_w_[k] = suffix_w_[k + 1] + b[b_order_[k]].weight;
      suffix_v_[k] = suffix_v_[k + 1] + b[b_order_[k]].value;
    }
  }

  bool Run() { return Place(0); }
  const std::vector<int>& slots() const { return slot_; }

 private:
  bool Open(std::size_t s) const { return need_w_[s] > 0 || need_v_[s] > 0; }

  bool Place(std::size_t k) {
    Weight open_w = 0;
    Value open_v = 0;
    for (std::size_t s = 0; s < need_w_.size(); ++s) {
      open_w += std::max<Weight>(need_w_[s], 0);
      open_v += std::max<Value>(need_v_[s], 0);
    }
    if (open_w == 0 && open_v == 0) return true;
    if (k == b_order_.size()) return false;
    if (suffix_w_[k] < open_w || suffix_v_[k] < open_v) return false;

    const Item& item = b_[b_order_[k]];
    std::vector<std::pair<Weight, Value>> tried;
    for (std::size_t s = 0; s < need_w_.size(); ++s) {
      if (!Open(s)) continue;
      const std::pair<Weight, Value> key{need_w_[s], need_v_[s]};
      if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
      tried.push_back(key);
      need_w_[s] -= item.weight;
      need_v_[s] -= with_value_ ? item.value : 0;
      slot_[b_order_[k]] = static_cast<int>(s);
      if (Place(k + 1)) return true;
      need_w_[s] += item.weight;
      need_v_[s] += with_value_ ? item.value : 0;
      slot_[b_order_[k]] = DominanceWitness::kDiscarded;
    }
    return Place(k + 1);
  }

  std::span<const Item> a_;
  std::span<const Item> b_;
  bool with_value_;
  std::vector<int> b_order_;
  std::vector<Weight> need_w_;
  std::vector<Value> need_v_;
  std::vector<Weight> suffix_w_;
  std::vector<Value> suffix_v_;
  std::vector<int> slot_;
};

std::optional<DominanceWitness> CmtWitness(std::span<const Item> a,
                                           std::span<const Item> b) {
  if (a.size() < b.size()) return std::nullopt;
  std::vector<int> ao = HeaviestFirst(a);
  std::vector<int> bo = HeaviestFirst(b);
  DominanceWitness w;
  w.slot.assign(b.size(), DominanceWitness::kDiscarded);
  // Sorted pairing is optimal for a one-to-one ">=" matching.
  for (std::size_t k = 0; k < bo.size(); ++k) {
    if (b[bo[k]].weight > a[ao[k]].weight) return std::nullopt;
    w.slot[bo[k]] = ao[k];
  }
  return w;
}

}  // namespace

std::string_view ToString(DominanceKind kind) {
  switch (kind) {
    case DominanceKind::kCmtPacking:
      return "cmt";
    case DominanceKind::kMtPacking:
      return "mt";
    case DominanceKind::kCovering:
      return "covering";
    case DominanceKind::kMkpPacking:
      return "mkp";
    case DominanceKind::kMccpCovering:
      return "mccp";
  }
  return "unknown";
}

DominanceKind DominanceFor(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kBinPacking:
      return DominanceKind::kMtPacking;
    case ProblemKind::kMkp:
      return DominanceKind::kMkpPacking;
    case ProblemKind::kBinCovering:
      return DominanceKind::kCovering;
    case ProblemKind::kMccp:
      return DominanceKind::kMccpCovering;
  }
  return DominanceKind::kMtPacking;
}

std::optional<DominanceWitness> FindDominanceWitness(DominanceKind kind,
                                                     std::span<const Item> a,
                                                     std::span<const Item> b) {
  switch (kind) {
    case DominanceKind::kCmtPacking:
      return CmtWitness(a, b);
    case DominanceKind::kMtPacking:
    case DominanceKind::kMkpPacking: {
      PackingMatcher m(a, b, kind == DominanceKind::kMkpPacking);
      if (!m.Run()) return std::nullopt;
      return DominanceWitness{m.slots()};
    }
    case DominanceKind::kCovering:
    case DominanceKind::kMccpCovering: {
      CoveringMatcher m(a, b, kind == DominanceKind::kMccpCovering);
      if (!m.Run()) return std::nullopt;
      return DominanceWitness{m.slots()};
    }
  }
  return std::nullopt;
}

bool Dominates(DominanceKind kind, std::span<const Item> a,
               std::span<const Item> b) {
  return FindDominanceWitness(kind, a, b).has_value();
}

bool CmtDominates(std::span<const Item> a, std::span<const Item> b) {
  return Dominates(DominanceKind::kCmtPacking, a, b);
}
bool MtDominatesPacking(std::span<const Item> a, std::span<const Item> b) {
  return Dominates(DominanceKind::kMtPacking, a, b);
}
bool DominatesCovering(std::span<const Item> a, std::span<const Item> b) {
  return Dominates(DominanceKind::kCovering, a, b);
}
bool DominatesMkp(std::span<const Item> a, std::span<const Item> b) {
  return Dominates(DominanceKind::kMkpPacking, a, b);
}
bool DominatesMccp(std::span<const Item> a, std::span<const Item> b) {
  return Dominates(DominanceKind::kMccpCovering, a, b);
}

}  // namespace bincomp
