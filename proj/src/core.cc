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

#include "bincomp/core.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bincomp {

std::string_view ToString(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kBinPacking:
      return "binpacking";
    case ProblemKind::kMkp:
      return "mkp";
    case ProblemKind::kBinCovering:
      return "bincovering";
    case ProblemKind::kMccp:
      return "mccp";
  }
  return "unknown";
}

std::optional<ProblemKind> ParseProblemKind(std::string_view token) {
  for (ProblemKind k : {ProblemKind::kBinPacking, ProblemKind::kMkp,
                        ProblemKind::kBinCovering, ProblemKind::kMccp}) {
    if (token == ToString(k)) return k;
  }
  return std::nullopt;
}

void SortCanonical(std::vector<Item>& items) {
  std::sort(items.begin(), items.end(), CanonicalLess);
}

Instance::Instance(ProblemKind kind, std::vector<Weight> containers,
                   std::vector<Item> items)
    : kind_(kind), containers_(std::move(containers)), items_(std::move(items)) {
  if (containers_.empty()) {
    throw std::invalid_argument("instance needs at least one container");
  }
  if (IsUniformKind(kind_) && containers_.size() != 1) {
    throw std::invalid_argument(std::string(ToString(kind_)) +
                                " takes exactly one container value");
  }
  for (Weight c : containers_) {
    if (c < 1) throw std::invalid_argument("container values must be >= 1");
  }
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const Item& it = items_[i];
    if (it.id != static_cast<ItemId>(i)) {
      throw std::invalid_argument("item ids must be dense and in order");
    }
    if (it.weight < 1) throw std::invalid_argument("item weight must be >= 1");
    if (it.value < 0) throw std::invalid_argument("item value must be >= 0");
    if (IsUniformKind(kind_) && it.value != 0) {
      throw std::invalid_argument(std::string(ToString(kind_)) +
                                  " items carry no value");
    }
  }
}

Weight Instance::total_weight() const { return WeightSum(items_); }

std::vector<Item> Instance::canonical_items() const {
  std::vector<Item> out = items_;
  SortCanonical(out);
  return out;
}

BinAssignment::BinAssignment(std::vector<Item> items) : items_(std::move(items)) {
  SortCanonical(items_);
  std::vector<ItemId> seen = ids();
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("bin assignment has duplicate item ids");
  }
  weight_sum_ = WeightSum(items_);
  value_sum_ = ValueSum(items_);
}

std::vector<ItemId> BinAssignment::ids() const {
  std::vector<ItemId> out;
  out.reserve(items_.size());
  for (const Item& it : items_) out.push_back(it.id);
  return out;
}

bool BinAssignment::Add(const Item& item) {
  for (const Item& it : items_) {
    if (it.id == item.id) return false;
  }
  items_.insert(std::upper_bound(items_.begin(), items_.end(), item,
                                 CanonicalLess),
                item);
  weight_sum_ += item.weight;
  value_sum_ += item.value;
  return true;
}

Weight WeightSum(std::span<const Item> items) {
  Weight s = 0;
  for (const Item& it : items) s += it.weight;
  return s;
}

Value ValueSum(std::span<const Item> items) {
  Value s = 0;
  for (const Item& it : items) s += it.value;
  return s;
}

bool FeasiblePacking(const BinAssignment& a, Weight capacity) {
  return a.weight_sum() <= capacity;
}

bool FeasibleCovering(const BinAssignment& a, Weight quota) {
  return a.weight_sum() >= quota;
}

bool IsMaximal(const BinAssignment& a, Weight capacity,
               std::span<const Item> remaining) {
  const Weight residual = capacity - a.weight_sum();
  return std::none_of(remaining.begin(), remaining.end(),
                      [&](const Item& x) { return x.weight <= residual; });
}

bool IsMinimal(const BinAssignment& a, Weight quota) {
  return std::all_of(a.items().begin(), a.items().end(), [&](const Item& x) {
    return a.weight_sum() - x.weight < quota;
  });
}

std::string_view ToString(ViolationCode code) {
  switch (code) {
    case ViolationCode::kUnknownItem:
      return "unknown-item";
    case ViolationCode::kDuplicateItem:
      return "duplicate-item";
    case ViolationCode::kMissingItem:
      return "missing-item";
    case ViolationCode::kCapacityExceeded:
      return "capacity-exceeded";
    case ViolationCode::kQuotaUnmet:
      return "quota-unmet";
    case ViolationCode::kBinCountMismatch:
      return "bin-count-mismatch";
    case ViolationCode::kObjectiveMismatch:
      return "objective-mismatch";
  }
  return "unknown";
}

bool ValidationVerdict::Has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

ValidationVerdict ValidateSolution(const Instance& inst, const Solution& sol) {
  ValidationVerdict verdict;
  auto report = [&](ViolationCode code, std::string detail) {
    verdict.violations.push_back({code, std::move(detail)});
  };

  const int n = inst.num_items();
  std::vector<int> uses(n, 0);
  auto tally = [&](const BinAssignment& a, const std::string& where) {
    for (const Item& it : a.items()) {
      if (it.id < 0 || it.id >= n) {
        report(ViolationCode::kUnknownItem,
               "item " + std::to_string(it.id) + " in " + where);
        continue;
      }
      const Item& truth = inst.items()[it.id];
      if (truth.weight != it.weight || truth.value != it.value) {
        report(ViolationCode::kUnknownItem,
               "item " + std::to_string(it.id) + " in " + where +
                   " does not match the instance");
      }
      ++uses[it.id];
    }
  };
  for (std::size_t b = 0; b < sol.bins.size(); ++b) {
    tally(sol.bins[b], "bin " + std::to_string(b));
  }
  tally(sol.overflow, "overflow");

  for (int id = 0; id < n; ++id) {
    if (uses[id] > 1) {
      report(ViolationCode::kDuplicateItem,
             "item " + std::to_string(id) + " used " +
                 std::to_string(uses[id]) + " times");
    }
  }

  const ProblemKind kind = inst.kind();
  if (IsUniformKind(kind)) {
    // Every item must be placed somewhere.
    for (int id = 0; id < n; ++id) {
      if (uses[id] == 0) {
        report(ViolationCode::kMissingItem,
               "item " + std::to_string(id) + " unassigned");
      }
    }
  } else if (static_cast<int>(sol.bins.size()) != inst.num_containers()) {
    report(ViolationCode::kBinCountMismatch,
           "expected " + std::to_string(inst.num_containers()) + " bins, got " +
               std::to_string(sol.bins.size()));
  }

  if (kind == ProblemKind::kBinPacking && !sol.overflow.empty()) {
    report(ViolationCode::kMissingItem, "bin packing cannot leave items out");
  }

  std::int64_t objective = 0;
  for (std::size_t b = 0; b < sol.bins.size(); ++b) {
    const BinAssignment& a = sol.bins[b];
    const Weight bound = IsUniformKind(kind)
                             ? inst.uniform_bound()
                             : (b < inst.containers().size()
                                    ? inst.containers()[b]
                                    : inst.containers().back());
    const std::string where = "bin " + std::to_string(b);
    switch (kind) {
      case ProblemKind::kBinPacking:
        if (!FeasiblePacking(a, bound)) {
          report(ViolationCode::kCapacityExceeded, where);
        }
        ++objective;
        break;
      case ProblemKind::kMkp:
        if (!FeasiblePacking(a, bound)) {
          report(ViolationCode::kCapacityExceeded, where);
        }
        objective += a.value_sum();
        break;
      case ProblemKind::kBinCovering:
        if (!FeasibleCovering(a, bound)) {
          report(ViolationCode::kQuotaUnmet, where);
        }
        ++objective;
        break;
      case ProblemKind::kMccp:
        if (!FeasibleCovering(a, bound)) {
          report(ViolationCode::kQuotaUnmet, where);
        }
        objective += a.value_sum();
        break;
    }
  }
  verdict.recomputed_objective = objective;
  if (objective != sol.objective) {
    report(ViolationCode::kObjectiveMismatch,
           "stated " + std::to_string(sol.objective) + ", recomputed " +
               std::to_string(objective));
  }
  return verdict;
}

}  // namespace bincomp
