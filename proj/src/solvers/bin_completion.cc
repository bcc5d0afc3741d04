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
#include <limits>
#include <stdexcept>

#include "bincomp/bounds.h"
#include "bincomp/rng.h"
#include "bincomp/solvers.h"
#include "solvers/search_support.h"

namespace bincomp {
namespace {

using internal::ExpandChildren;
using internal::ExpandContext;
using internal::RemoveItems;
using internal::SearchControl;

void Require(const Instance& inst, ProblemKind kind) {
  if (inst.kind() != kind) {
    throw std::invalid_argument(std::string("expected a ") +
                                std::string(ToString(kind)) + " instance");
  }
}

PruningOptions OptionsFor(ProblemKind kind, const SolverConfig& cfg) {
  return {cfg.pruning, DominanceFor(kind), cfg.ndp_depth_limit};
}

// Under NP the records that can no longer fire are dropped before the node
// expands; the caller's stack is left alone.
NogoodStack* ActiveStack(NogoodStack& stack, std::span<const Item> remaining,
                         Pruning policy, NogoodStack& scratch) {
  if (policy != Pruning::kNogood || stack.empty()) return &stack;
  scratch = CompactStack(stack, remaining, policy);
  return &scratch;
}

class BinPackingSearch {
 public:
  BinPackingSearch(const Instance& inst, const SolverConfig& cfg)
      : cfg_(cfg),
        ctl_(cfg),
        cap_(inst.uniform_bound()),
        width_(EffectiveWidth(cfg, inst.kind())),
        ordering_(cfg.ordering.value_or(DefaultOrdering(inst.kind()))),
        options_(OptionsFor(inst.kind(), cfg)),
        items_(inst.canonical_items()) {}

  SolveReport Run() {
    for (const Item& it : items_) {
      if (it.weight > cap_) {
        ctl_.Enter();
        SolveReport r = internal::Finish(ctl_, {}, 0);
        r.status = SolveStatus::kInfeasible;
        return r;
      }
    }
    Solution heuristic = BestFitDecreasing(items_, cap_);
    best_ = heuristic.objective;
    best_bins_ = std::move(heuristic.bins);
    if (cfg_.on_incumbent) cfg_.on_incumbent(best_);
    root_bound_ = BinPackingLowerBound(items_, cap_);
    done_ = best_ == root_bound_;
    NogoodStack stack;
    if (done_) {
      ctl_.Enter();
    } else {
      Search(items_, stack, 0);
    }
    Solution sol;
    sol.bins = best_bins_;
    return internal::Finish(ctl_, std::move(sol), best_);
  }

 private:
  void Search(const std::vector<Item>& remaining, NogoodStack& stack,
              int depth) {
    if (!ctl_.Enter()) return;
    if (remaining.empty()) {
      const auto used = static_cast<std::int64_t>(path_.size());
      if (used < best_) {
        best_ = used;
        best_bins_ = path_;
        if (cfg_.on_incumbent) cfg_.on_incumbent(best_);
        done_ = best_ == root_bound_;
      }
      return;
    }
    if (static_cast<std::int64_t>(path_.size()) +
            BinPackingLowerBound(remaining, cap_) >=
        best_) {
      return;
    }
    NogoodStack scratch;
    NogoodStack* active = ActiveStack(stack, remaining, cfg_.pruning, scratch);
    const Item seed = remaining.front();
    std::optional<GenCursor> cursor =
        GenCursor::Open(ProblemKind::kBinPacking, cap_, remaining, seed.id);
    if (!cursor) return;
    ExpandContext ctx{width_, ordering_, options_,
                      CandidateBin{std::span<const Item>(&seed, 1), cap_, true},
                      seed.id};
    ExpandChildren(
        *cursor, ctx, *active, depth,
        [&](const BinAssignment& child) {
          path_.push_back(child);
          Search(RemoveItems(remaining, child), *active, depth + 1);
          path_.pop_back();
        },
        [&] { return done_ || ctl_.stopped(); });
  }

  const SolverConfig& cfg_;
  SearchControl ctl_;
  Weight cap_;
  std::optional<int> width_;
  ValueOrdering ordering_;
  PruningOptions options_;
  std::vector<Item> items_;
  std::int64_t best_ = 0;
  std::int64_t root_bound_ = 0;
  bool done_ = false;
  std::vector<BinAssignment> best_bins_;
  std::vector<BinAssignment> path_;
};

class BinCoveringSearch {
 public:
  BinCoveringSearch(const Instance& inst, const SolverConfig& cfg)
      : cfg_(cfg),
        ctl_(cfg),
        quota_(inst.uniform_bound()),
        width_(EffectiveWidth(cfg, inst.kind())),
        ordering_(cfg.ordering.value_or(DefaultOrdering(inst.kind()))),
        options_(OptionsFor(inst.kind(), cfg)),
        items_(inst.canonical_items()) {}

  SolveReport Run() {
    best_ = CoveringGreedyLower(items_, quota_);
    if (cfg_.on_incumbent) cfg_.on_incumbent(best_.objective);
    root_bound_ = CoveringUpperBound(items_, quota_);
    done_ = best_.objective == root_bound_;
    NogoodStack stack;
    if (done_) {
      ctl_.Enter();
    } else {
      Search(items_, stack, 0);
    }
    const std::int64_t objective = best_.objective;
    return internal::Finish(ctl_, std::move(best_), objective);
  }

 private:
  void Search(const std::vector<Item>& remaining, NogoodStack& stack,
              int depth) {
    if (!ctl_.Enter()) return;
    const auto covered = static_cast<std::int64_t>(path_.size());
    // Nothing left can reach the quota: the rest is overflow.
    if (WeightSum(remaining) < quota_) {
      if (covered > best_.objective) {
        best_.bins = path_;
        best_.overflow = BinAssignment(remaining);
        best_.objective = covered;
        if (cfg_.on_incumbent) cfg_.on_incumbent(covered);
        done_ = covered == root_bound_;
      }
      return;
    }
    if (covered + CoveringUpperBound(remaining, quota_) <= best_.objective) {
      return;
    }
    NogoodStack scratch;
    NogoodStack* active = ActiveStack(stack, remaining, cfg_.pruning, scratch);
    const Item seed = remaining.front();
    std::optional<GenCursor> cursor =
        GenCursor::Open(ProblemKind::kBinCovering, quota_, remaining, seed.id);
    if (!cursor) return;
    ExpandContext ctx{
        width_, ordering_, options_,
        CandidateBin{std::span<const Item>(&seed, 1), quota_, false}, seed.id};
    ExpandChildren(
        *cursor, ctx, *active, depth,
        [&](const BinAssignment& child) {
          path_.push_back(child);
          Search(RemoveItems(remaining, child), *active, depth + 1);
          path_.pop_back();
        },
        [&] { return done_ || ctl_.stopped(); });
  }

  const SolverConfig& cfg_;
  SearchControl ctl_;
  Weight quota_;
  std::optional<int> width_;
  ValueOrdering ordering_;
  PruningOptions options_;
  std::vector<Item> items_;
  Solution best_;
  std::int64_t root_bound_ = 0;
  bool done_ = false;
  std::vector<BinAssignment> path_;
};

// MKP and MCCP: one container is filled per level, no seed item, and items
// may stay unassigned.
class SubsetSearch {
 public:
  SubsetSearch(const Instance& inst, const SolverConfig& cfg)
      : cfg_(cfg),
        ctl_(cfg),
        kind_(inst.kind()),
        packing_(IsPackingKind(inst.kind())),
        bounds_(inst.containers()),
        width_(EffectiveWidth(cfg, inst.kind())),
        ordering_(cfg.ordering.value_or(DefaultOrdering(inst.kind()))),
        options_(OptionsFor(inst.kind(), cfg)),
        items_(inst.canonical_items()),
        assigned_(bounds_.size()) {
    // Equal MKP capacities are ordered by a seeded draw made once per bin, so
    // the choice at a node does not depend on the path that led to it.
    SplitMix64 rng(cfg.rng_seed);
    priority_.resize(bounds_.size());
    for (std::uint64_t& p : priority_) p = packing_ ? rng.Next() : 0;
  }

  SolveReport Run() {
    std::vector<int> open(bounds_.size());
    for (std::size_t i = 0; i < open.size(); ++i) open[i] = static_cast<int>(i);
    NogoodStack stack;
    Search(items_, open, 0, stack, 0);
    Solution sol;
    sol.bins = best_bins_;
    if (sol.bins.empty()) sol.bins.resize(bounds_.size());
    SolveReport r = internal::Finish(ctl_, std::move(sol), have_best_ ? best_ : 0);
    if (!packing_ && !have_best_ && !ctl_.stopped()) {
      r.status = SolveStatus::kInfeasible;
    }
    return r;
  }

 private:
  bool Better(Value v) const {
    if (!have_best_) return true;
    return packing_ ? v > best_ : v < best_;
  }

  void Record(Value v) {
    have_best_ = true;
    best_ = v;
    best_bins_ = assigned_;
    if (cfg_.on_incumbent) cfg_.on_incumbent(v);
  }

  // Smallest bound first. MKP ties use the seeded priority, MCCP ties the
  // container index.
  int ChooseBin(const std::vector<int>& open) const {
    int best = open.front();
    for (int b : open) {
      if (bounds_[b] != bounds_[best]) {
        if (bounds_[b] < bounds_[best]) best = b;
      } else if (priority_[b] != priority_[best]) {
        if (priority_[b] < priority_[best]) best = b;
      } else if (b < best) {
        best = b;
      }
    }
    return best;
  }

  // True when the subtree cannot beat the incumbent.
  bool Hopeless(const std::vector<Item>& remaining,
                const std::vector<int>& open, Value value) const {
    std::vector<Weight> bounds;
    bounds.reserve(open.size());
    for (int b : open) bounds.push_back(bounds_[b]);
    if (packing_) {
      return have_best_ && value + SmkpUpperBound(remaining, bounds) <= best_;
    }
    std::optional<Value> lb = MccpL2Bound(remaining, bounds);
    if (!lb) return true;
    return have_best_ && value + *lb >= best_;
  }

  void Search(const std::vector<Item>& remaining, const std::vector<int>& open,
              Value value, NogoodStack& stack, int depth) {
    if (!ctl_.Enter()) return;
    if (open.empty() || (packing_ && remaining.empty())) {
      if (Better(value)) Record(value);
      return;
    }
    if (Hopeless(remaining, open, value)) return;
    NogoodStack scratch;
    NogoodStack* active = ActiveStack(stack, remaining, cfg_.pruning, scratch);
    const int bin = ChooseBin(open);
    std::optional<GenCursor> cursor =
        GenCursor::Open(kind_, bounds_[bin], remaining);
    if (!cursor) return;
    std::vector<int> rest_open;
    for (int b : open) {
      if (b != bin) rest_open.push_back(b);
    }
    ExpandContext ctx{width_, ordering_, options_,
                      CandidateBin{{}, bounds_[bin], packing_}, std::nullopt};
    ExpandChildren(
        *cursor, ctx, *active, depth,
        [&](const BinAssignment& child) {
          assigned_[bin] = child;
          Search(RemoveItems(remaining, child), rest_open,
                 value + child.value_sum(), *active, depth + 1);
          assigned_[bin] = BinAssignment();
        },
        [&] { return ctl_.stopped(); });
  }

  const SolverConfig& cfg_;
  SearchControl ctl_;
  ProblemKind kind_;
  bool packing_;
  std::vector<Weight> bounds_;
  std::optional<int> width_;
  ValueOrdering ordering_;
  PruningOptions options_;
  std::vector<Item> items_;
  std::vector<std::uint64_t> priority_;
  std::vector<BinAssignment> assigned_;
  bool have_best_ = false;
  Value best_ = 0;
  std::vector<BinAssignment> best_bins_;
};

}  // namespace

SolveReport SolveBinPacking(const Instance& inst, const SolverConfig& cfg) {
  Require(inst, ProblemKind::kBinPacking);
  return BinPackingSearch(inst, cfg).Run();
}

SolveReport SolveMkp(const Instance& inst, const SolverConfig& cfg) {
  Require(inst, ProblemKind::kMkp);
  return SubsetSearch(inst, cfg).Run();
}

SolveReport SolveBinCovering(const Instance& inst, const SolverConfig& cfg) {
  Require(inst, ProblemKind::kBinCovering);
  return BinCoveringSearch(inst, cfg).Run();
}

SolveReport SolveMccp(const Instance& inst, const SolverConfig& cfg) {
  Require(inst, ProblemKind::kMccp);
  return SubsetSearch(inst, cfg).Run();
}

}  // namespace bincomp
