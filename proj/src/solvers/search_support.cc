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

#include "solvers/search_support.h"

#include <algorithm>

#include "bincomp/nogood.h"

namespace bincomp::internal {

SearchControl::SearchControl(const SolverConfig& cfg)
    : start_(std::chrono::steady_clock::now()), node_limit_(cfg.node_limit) {
  const auto budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(std::max(0.0, cfg.time_limit_s)));
  deadline_ = start_ + budget;
}

bool SearchControl::Enter() {
  if (stopped()) return false;
  if (node_limit_ && nodes_ >= *node_limit_) {
    status_ = SolveStatus::kNodeLimit;
    return false;
  }
  if (std::chrono::steady_clock::now() > deadline_) {
    status_ = SolveStatus::kTimeLimit;
    return false;
  }
  ++nodes_;
  return true;
}

double SearchControl::elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_)
      .count();
}

std::vector<Item> RemoveItems(std::span<const Item> remaining,
                              const BinAssignment& taken) {
  std::vector<Item> out;
  out.reserve(remaining.size());
  const std::vector<Item>& t = taken.items();
  std::size_t j = 0;
  for (const Item& it : remaining) {
    while (j < t.size() && CanonicalLess(t[j], it)) ++j;
    if (j < t.size() && t[j].id == it.id) {
      ++j;
      continue;
    }
    out.push_back(it);
  }
  return out;
}

std::vector<Item> RestInShapeOrder(const BinAssignment& a,
                                   std::optional<ItemId> skip) {
  std::vector<Item> out;
  out.reserve(a.items().size());
  for (const Item& it : a.items()) {
    if (!skip || it.id != *skip) out.push_back(it);
  }
  SortByShape(out);
  return out;
}

SolveReport Finish(const SearchControl& ctl, Solution solution,
                   std::int64_t objective) {
  SolveReport r;
  solution.objective = objective;
  r.solution = std::move(solution);
  r.objective = objective;
  r.nodes = ctl.nodes();
  r.elapsed_s = ctl.elapsed();
  r.status = ctl.status();
  return r;
}

}  // namespace bincomp::internal
