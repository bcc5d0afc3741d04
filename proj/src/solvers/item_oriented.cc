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

// Item-oriented branch-and-bound: level k decides where item k (largest
// first) goes.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bincomp/bounds.h"
#include "bincomp/solvers.h"
#include "solvers/search_support.h"

namespace bincomp {
namespace {

using internal::SearchControl;

constexpr int kUnassigned = -1;

class ItemSearch {
 public:
  ItemSearch(const Instance& inst, const SolverConfig& cfg)
      : cfg_(cfg),
        ctl_(cfg),
        kind_(inst.kind()),
        items_(inst.canonical_items()),
        place_(items_.size(), kUnassigned) {
    suffix_.assign(items_.size() + 1, 0);
    for (std::size_t k = items_.size(); k-- > 0;) {
      suffix_[k] = suffix_[k + 1] + items_[k].weight;
    }
    if (IsUniformKind(kind_)) {
      uniform_ = inst.uniform_bound();
    } else {
      bounds_ = inst.containers();
      loads_.assign(bounds_.size(), 0);
    }
  }

  SolveReport Run() {
    switch (kind_) {
      case ProblemKind::kBinPacking:
        return RunBinPacking();
      case ProblemKind::kMkp:
        return RunMkp();
      case ProblemKind::kBinCovering:
        return RunBinCovering();
      case ProblemKind::kMccp:
        return RunMccp();
    }
    throw std::invalid_argument("unknown problem kind");
  }

 private:
  // Bins from a placement vector; bin b gets every item placed in b.
  std::vector<BinAssignment> Collect(const std::vector<int>& place,
                                     int num_bins) const {
    std::vector<std::vector<Item>> bins(num_bins);
    for (std::size_t k = 0; k < items_.size(); ++k) {
      if (place[k] >= 0) bins[place[k]].push_back(items_[k]);
    }
    std::vector<BinAssignment> out;
    out.reserve(bins.size());
    for (auto& b : bins) out.emplace_back(std::move(b));
    return out;
  }

  void Improved(std::int64_t objective) {
    best_ = objective;
    have_best_ = true;
    if (cfg_.on_incumbent) cfg_.on_incumbent(objective);
  }

  // Bin packing. --------------------------------------------------------

  SolveReport RunBinPacking() {
    for (const Item& it : items_) {
      if (it.weight > uniform_) {
        ctl_.Enter();
        SolveReport r = internal::Finish(ctl_, {}, 0);
        r.status = SolveStatus::kInfeasible;
        return r;
      }
    }
    Solution bfd = BestFitDecreasing(items_, uniform_);
    Improved(bfd.objective);
    best_solution_ = std::move(bfd);
    root_bound_ = BinPackingLowerBound(items_, uniform_);
    done_ = best_ == root_bound_;
    if (done_) {
      ctl_.Enter();
    } else {
      PackDfs(0);
    }
    return internal::Finish(ctl_, std::move(best_solution_), best_);
  }

  void PackDfs(std::size_t k) {
    if (!ctl_.Enter()) return;
    const auto open = static_cast<std::int64_t>(loads_.size());
    if (k == items_.size()) {
      if (open < best_) {
        Improved(open);
        best_solution_ = Solution{Collect(place_, static_cast<int>(open)), {}, 0};
        done_ = best_ == root_bound_;
      }
      return;
    }
    Weight free = 0;
    for (Weight l : loads_) free += uniform_ - l;
    const Weight spill = suffix_[k] - free;
    const std::int64_t lb =
        open + (spill > 0 ? (spill + uniform_ - 1) / uniform_ : 0);
    if (lb >= best_) return;
    const std::vector<Weight> caps(loads_.size(), uniform_);
    const Weight w = items_[k].weight;
    for (int t : ItemBranchTargets(kind_, loads_, caps, w)) {
      if (t == kNewBin) {
        loads_.push_back(w);
        place_[k] = static_cast<int>(loads_.size()) - 1;
        PackDfs(k + 1);
        loads_.pop_back();
      } else {
        loads_[t] += w;
        place_[k] = t;
        PackDfs(k + 1);
        loads_[t] -= w;
      }
      place_[k] = kUnassigned;
      if (done_ || ctl_.stopped()) return;
    }
  }

  // Multiple knapsack. ----------------------------------------------------

  SolveReport RunMkp() {
    best_ = -1;
    MkpDfs(0, 0);
    best_solution_.bins.resize(bounds_.size());
    return internal::Finish(ctl_, std::move(best_solution_),
                            have_best_ ? best_ : 0);
  }

  void MkpDfs(std::size_t k, Value profit) {
    if (!ctl_.Enter()) return;
    if (k == items_.size()) {
      if (profit > best_) {
        Improved(profit);
        best_solution_ = Solution{Collect(place_, bounds_.size()), {}, 0};
      }
      return;
    }
    std::vector<int> by_residual(bounds_.size());
    std::iota(by_residual.begin(), by_residual.end(), 0);
    std::stable_sort(by_residual.begin(), by_residual.end(), [&](int a, int b) {
      return bounds_[a] - loads_[a] < bounds_[b] - loads_[b];
    });
    std::vector<Weight> residuals;
    for (int b : by_residual) residuals.push_back(bounds_[b] - loads_[b]);
    const std::span<const Item> rest(items_.data() + k, items_.size() - k);
    const Value upper = SmkpUpperBound(rest, residuals);
    if (profit + upper <= best_) return;
    // Bound-and-bound: a greedy completion that reaches the bound closes the
    // subtree.
    Solution greedy = MtmGreedyBound(rest, residuals);
    if (profit + greedy.objective > best_) {
      std::vector<int> place = place_;
      for (std::size_t g = 0; g < greedy.bins.size(); ++g) {
        for (const Item& it : greedy.bins[g].items()) {
          const auto pos = std::find_if(
              items_.begin() + k, items_.end(),
              [&](const Item& x) { return x.id == it.id; });
          place[pos - items_.begin()] = by_residual[g];
        }
      }
      Improved(profit + greedy.objective);
      best_solution_ = Solution{Collect(place, bounds_.size()), {}, 0};
    }
    if (greedy.objective == upper) return;
    const Item& it = items_[k];
    for (int t : ItemBranchTargets(kind_, loads_, bounds_, it.weight)) {
      if (t == kDiscard) {
        MkpDfs(k + 1, profit);
      } else {
        loads_[t] += it.weight;
        place_[k] = t;
        MkpDfs(k + 1, profit + it.value);
        loads_[t] -= it.weight;
        place_[k] = kUnassigned;
      }
      if (ctl_.stopped()) return;
    }
  }

  // Bin covering. -------------------------------------------------------

  SolveReport RunBinCovering() {
    Solution greedy = CoveringGreedyLower(items_, uniform_);
    Improved(greedy.objective);
    best_solution_ = std::move(greedy);
    root_bound_ = CoveringUpperBound(items_, uniform_);
    done_ = best_ == root_bound_;
    if (done_) {
      ctl_.Enter();
    } else {
      CoverDfs(0, 0);
    }
    return internal::Finish(ctl_, std::move(best_solution_), best_);
  }

  void CoverDfs(std::size_t k, std::int64_t covered) {
    if (!ctl_.Enter()) return;
    if (k == items_.size()) {
      if (covered > best_) {
        Improved(covered);
        best_solution_ = CoveringSolution();
        done_ = best_ == root_bound_;
      }
      return;
    }
    Weight open_load = 0;
    for (Weight l : loads_) {
      if (l < uniform_) open_load += l;
    }
    if (covered + (suffix_[k] + open_load) / uniform_ <= best_) return;
    const std::vector<Weight> quotas(loads_.size(), uniform_);
    const Weight w = items_[k].weight;
    for (int t : ItemBranchTargets(kind_, loads_, quotas, w)) {
      if (t == kDiscard) {
        CoverDfs(k + 1, covered);
      } else if (t == kNewBin) {
        loads_.push_back(w);
        place_[k] = static_cast<int>(loads_.size()) - 1;
        CoverDfs(k + 1, covered + (w >= uniform_ ? 1 : 0));
        loads_.pop_back();
      } else {
        const bool closes = loads_[t] + w >= uniform_;
        loads_[t] += w;
        place_[k] = t;
        CoverDfs(k + 1, covered + (closes ? 1 : 0));
        loads_[t] -= w;
      }
      place_[k] = kUnassigned;
      if (done_ || ctl_.stopped()) return;
    }
  }

  Solution CoveringSolution() const {
    std::vector<BinAssignment> bins =
        Collect(place_, static_cast<int>(loads_.size()));
    Solution sol;
    std::vector<Item> overflow;
    for (std::size_t k = 0; k < items_.size(); ++k) {
      if (place_[k] < 0 || loads_[place_[k]] < uniform_) {
        overflow.push_back(items_[k]);
      }
    }
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (loads_[b] >= uniform_) sol.bins.push_back(std::move(bins[b]));
    }
    sol.overflow = BinAssignment(std::move(overflow));
    return sol;
  }

  // Min-cost covering. --------------------------------------------------

  SolveReport RunMccp() {
    MccpDfs(0, 0);
    if (!have_best_) best_solution_.bins.resize(bounds_.size());
    SolveReport r = internal::Finish(ctl_, std::move(best_solution_),
                                     have_best_ ? best_ : 0);
    if (!have_best_ && !ctl_.stopped()) r.status = SolveStatus::kInfeasible;
    return r;
  }

  void MccpDfs(std::size_t k, Value cost) {
    if (!ctl_.Enter()) return;
    std::vector<Weight> needs;
    for (std::size_t b = 0; b < bounds_.size(); ++b) {
      if (loads_[b] < bounds_[b]) needs.push_back(bounds_[b] - loads_[b]);
    }
    if (needs.empty()) {
      if (!have_best_ || cost < best_) {
        Improved(cost);
        best_solution_ = Solution{Collect(place_, bounds_.size()), {}, 0};
      }
      return;
    }
    if (k == items_.size()) return;
    const std::span<const Item> rest(items_.data() + k, items_.size() - k);
    std::optional<Value> lb = MccpL2Bound(rest, needs);
    if (!lb || (have_best_ && cost + *lb >= best_)) return;
    const Item& it = items_[k];
    for (int t : ItemBranchTargets(kind_, loads_, bounds_, it.weight)) {
      if (t == kDiscard) {
        MccpDfs(k + 1, cost);
      } else {
        loads_[t] += it.weight;
        place_[k] = t;
        MccpDfs(k + 1, cost + it.value);
        loads_[t] -= it.weight;
        place_[k] = kUnassigned;
      }
      if (ctl_.stopped()) return;
    }
  }

  const SolverConfig& cfg_;
  SearchControl ctl_;
  ProblemKind kind_;
  std::vector<Item> items_;
  std::vector<Weight> suffix_;
  Weight uniform_ = 0;
  std::vector<Weight> bounds_;
  std::vector<Weight> loads_;
  std::vector<int> place_;
  std::int64_t best_ = 0;
  bool have_best_ = false;
  std::int64_t root_bound_ = 0;
  bool done_ = false;
  Solution best_solution_;
};

}  // namespace

std::vector<int> ItemBranchTargets(ProblemKind kind,
                                   std::span<const Weight> loads,
                                   std::span<const Weight> bounds,
                                   Weight item_weight) {
  if (loads.size() != bounds.size()) {
    throw std::invalid_argument("loads and bounds differ in length");
  }
  std::vector<int> order(loads.size());
  std::iota(order.begin(), order.end(), 0);
  if (kind == ProblemKind::kMkp) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return bounds[a] - loads[a] < bounds[b] - loads[b];
    });
  } else if (kind == ProblemKind::kMccp) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return bounds[a] < bounds[b]; });
  }
  std::vector<int> out;
  std::vector<std::pair<Weight, Weight>> seen;
  for (int b : order) {
    const bool eligible = IsPackingKind(kind)
                              ? loads[b] + item_weight <= bounds[b]
                              : loads[b] < bounds[b];
    if (!eligible) continue;
    // Bins that look the same from here on are interchangeable.
    const std::pair<Weight, Weight> state{loads[b], bounds[b]};
    if (std::find(seen.begin(), seen.end(), state) != seen.end()) continue;
    seen.push_back(state);
    out.push_back(b);
  }
  if (IsUniformKind(kind)) out.push_back(kNewBin);
  if (kind != ProblemKind::kBinPacking) out.push_back(kDiscard);
  return out;
}

SolveReport SolveItemOriented(const Instance& inst, const SolverConfig& cfg) {
  return ItemSearch(inst, cfg).Run();
}

}  // namespace bincomp
