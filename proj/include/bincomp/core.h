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

// Domain types shared by every part of the library: items, instances, bin
// assignments and solutions, plus the per-bin feasibility predicates and a
// whole-solution validator.

#ifndef BINCOMP_CORE_H_
#define BINCOMP_CORE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bincomp {

using Weight = std::int64_t;
using Value = std::int64_t;
using ItemId = int;

enum class ProblemKind { kBinPacking, kMkp, kBinCovering, kMccp };

std::string_view ToString(ProblemKind kind);
std::optional<ProblemKind> ParseProblemKind(std::string_view token);

// Packing kinds bound bins from above (capacity); covering kinds from below
// (quota).
inline bool IsPackingKind(ProblemKind kind) {
  return kind == ProblemKind::kBinPacking || kind == ProblemKind::kMkp;
}
// Uniform kinds carry a single container value replicated on demand.
inline bool IsUniformKind(ProblemKind kind) {
  return kind == ProblemKind::kBinPacking || kind == ProblemKind::kBinCovering;
}

struct Item {
  ItemId id = 0;
  Weight weight = 1;
  // Profit for MKP, cost for MCCP, 0 otherwise.
  Value value = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

// Canonical order: non-increasing weight, then ascending id.
inline bool CanonicalLess(const Item& a, const Item& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.id < b.id;
}
void SortCanonical(std::vector<Item>& items);

// Items are interchangeable for dominance purposes when weight and value agree.
inline bool SameShape(const Item& a, const Item& b) {
  return a.weight == b.weight && a.value == b.value;
}

class Instance {
 public:
  // Throws std::invalid_argument when an invariant is violated. Item ids
  // must be 0..n-1 in order.
  Instance(ProblemKind kind, std::vector<Weight> containers,
           std::vector<Item> items);

  ProblemKind kind() const { return kind_; }
  const std::vector<Weight>& containers() const { return containers_; }
  // Indexed by id.
  const std::vector<Item>& items() const { return items_; }
  int num_items() const { return static_cast<int>(items_.size()); }
  // Number of explicit containers (1 for the uniform kinds).
  int num_containers() const { return static_cast<int>(containers_.size()); }
  // Capacity or quota of uniform kinds.
  Weight uniform_bound() const { return containers_.front(); }

  Weight total_weight() const;
  // Items sorted canonically.
  std::vector<Item> canonical_items() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  ProblemKind kind_;
  std::vector<Weight> containers_;
  std::vector<Item> items_;
};

// The complete set of items placed in one bin, kept in canonical order with
// cached sums.
class BinAssignment {
 public:
  BinAssignment() = default;
  explicit BinAssignment(std::vector<Item> items);

  const std::vector<Item>& items() const { return items_; }
  std::vector<ItemId> ids() const;
  Weight weight_sum() const { return weight_sum_; }
  Value value_sum() const { return value_sum_; }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }

  // Returns false (and leaves the assignment unchanged) when the id is
  // already present.
  bool Add(const Item& item);

  friend bool operator==(const BinAssignment&, const BinAssignment&) = default;

 private:
  std::vector<Item> items_;
  Weight weight_sum_ = 0;
  Value value_sum_ = 0;
};

// Weight sum of an arbitrary item list.
Weight WeightSum(std::span<const Item> items);
Value ValueSum(std::span<const Item> items);

struct Solution {
  // Bin packing: one entry per opened bin. Bin covering: one entry per covered
  // bin. MKP/MCCP: one entry per container, indexed like the instance.
  std::vector<BinAssignment> bins;
  // Items placed in no counted bin. Mandatory home for leftover items in bin
  // covering; optional for MKP/MCCP where unassigned items are implicit.
  BinAssignment overflow;
  std::int64_t objective = 0;
};

bool FeasiblePacking(const BinAssignment& a, Weight capacity);
bool FeasibleCovering(const BinAssignment& a, Weight quota);

// True iff no item of `remaining` fits into the residual capacity.
bool IsMaximal(const BinAssignment& a, Weight capacity,
               std::span<const Item> remaining);
// True iff removing any single member breaks the quota.
bool IsMinimal(const BinAssignment& a, Weight quota);

enum class ViolationCode {
  kUnknownItem,
  kDuplicateItem,
  kMissingItem,
  kCapacityExceeded,
  kQuotaUnmet,
  kBinCountMismatch,
  kObjectiveMismatch,
};

std::string_view ToString(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct ValidationVerdict {
  std::vector<Violation> violations;
  // Objective recomputed from the bins, independent of Solution::objective.
  std::int64_t recomputed_objective = 0;

  bool ok() const { return violations.empty(); }
  bool Has(ViolationCode code) const;
};

// Checks every constraint of the instance's kind and that the stated
// objective matches the recomputed one.
ValidationVerdict ValidateSolution(const Instance& inst, const Solution& sol);

}  // namespace bincomp

#endif  // BINCOMP_CORE_H_
