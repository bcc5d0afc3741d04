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

#include "bincomp/nogood.h"

#include <algorithm>

namespace bincomp {
namespace {

bool Fits(Weight load, Weight bound, bool packing) {
  return packing ? load <= bound : load >= bound;
}

// Returns `items` in shape order, copying only when needed.
std::span<const Item> InShapeOrder(std::span<const Item> items,
                                   std::vector<Item>& scratch) {
  if (std::is_sorted(items.begin(), items.end(), ShapeLess)) return items;
  scratch.assign(items.begin(), items.end());
  SortByShape(scratch);
  return scratch;
}

}  // namespace

std::string_view ToString(Pruning p) {
  switch (p) {
    case Pruning::kNone:
      return "none";
    case Pruning::kNogood:
      return "np";
    case Pruning::kNogoodDominance:
      return "ndp";
  }
  return "unknown";
}

std::optional<Pruning> ParsePruning(std::string_view token) {
  for (Pruning p :
       {Pruning::kNone, Pruning::kNogood, Pruning::kNogoodDominance}) {
    if (token == ToString(p)) return p;
  }
  return std::nullopt;
}

bool ShapeLess(const Item& a, const Item& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.value != b.value) return a.value > b.value;
  return a.id < b.id;
}

void SortByShape(std::vector<Item>& items) {
  std::sort(items.begin(), items.end(), ShapeLess);
}

bool ContainsShapes(std::span<const Item> super, std::span<const Item> sub) {
  std::vector<Item> s1;
  std::vector<Item> s2;
  super = InShapeOrder(super, s1);
  sub = InShapeOrder(sub, s2);
  std::size_t i = 0;
  for (const Item& want : sub) {
    while (i < super.size() &&
           (super[i].weight > want.weight ||
            (super[i].weight == want.weight && super[i].value > want.value))) {
      ++i;
    }
    if (i == super.size() || !SameShape(super[i], want)) return false;
    ++i;
  }
  return true;
}

bool NpPrunes(std::span<const Item> candidate, const NogoodRecord& rec,
              const CandidateBin& bin) {
  if (!ContainsShapes(candidate, rec.prior)) return false;
  const Weight prior = WeightSum(rec.prior);
  const Weight taken = WeightSum(rec.taken);
  const Weight cand_after = WeightSum(candidate) - prior + taken;
  const Weight host_after = WeightSum(rec.host_seed) + prior;
  return Fits(cand_after, bin.bound, bin.packing) &&
         Fits(host_after, rec.host_bound, bin.packing);
}

bool NdpPrunes(std::span<const Item> candidate, const NogoodRecord& rec,
               const CandidateBin& bin, DominanceKind kind) {
  std::vector<Item> rest;
  rest.reserve(candidate.size());
  for (const Item& it : candidate) {
    const bool is_seed = std::any_of(bin.seed.begin(), bin.seed.end(),
                                     [&](const Item& s) { return s.id == it.id; });
    if (!is_seed) rest.push_back(it);
  }
  const Weight cand_after = WeightSum(bin.seed) + WeightSum(rec.taken);
  const Weight host_after = WeightSum(rec.host_seed) + WeightSum(rest);
  if (!Fits(cand_after, bin.bound, bin.packing) ||
      !Fits(host_after, rec.host_bound, bin.packing)) {
    return false;
  }
  return Dominates(kind, rec.prior, rest);
}

std::size_t NogoodStack::record_count() const {
  std::size_t n = 0;
  for (const Frame& f : frames_) n += f.size();
  return n;
}

bool ApplyPruning(std::span<const Item> candidate, const CandidateBin& bin,
                  const NogoodStack& stack, const PruningOptions& options,
                  int candidate_depth) {
  if (options.policy == Pruning::kNone) return false;
  for (const NogoodStack::Frame& frame : stack.frames()) {
    for (const NogoodRecord& rec : frame) {
      if (NpPrunes(candidate, rec, bin)) return true;
    }
  }
  if (options.policy != Pruning::kNogoodDominance) return false;
  if (options.ndp_depth_limit && candidate_depth > *options.ndp_depth_limit) {
    return false;
  }
  for (const NogoodStack::Frame& frame : stack.frames()) {
    for (const NogoodRecord& rec : frame) {
      if (NdpPrunes(candidate, rec, bin, options.kind)) return true;
    }
  }
  return false;
}

NogoodStack CompactStack(const NogoodStack& stack,
                         std::span<const Item> remaining, Pruning policy) {
  if (policy != Pruning::kNogood) return stack;
  std::vector<Item> scratch;
  std::span<const Item> pool = InShapeOrder(remaining, scratch);
  NogoodStack out;
  for (const NogoodStack::Frame& frame : stack.frames()) {
    NogoodStack::Frame kept;
    for (const NogoodRecord& rec : frame) {
      if (ContainsShapes(pool, rec.prior)) kept.push_back(rec);
    }
    out.Push(std::move(kept));
  }
  return out;
}

}  // namespace bincomp
