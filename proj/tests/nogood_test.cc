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
#include "doctest.h"
#include "helpers.h"
#include "oracles.h"

namespace bincomp {
namespace {

using testing::Pick;
using testing::W;

// {10,9,8,7,7,3,3,2,2} with c = 20. The root bin holds the 10; its children
// (10,8,2) and (10,7,3) are siblings, and the search is under (10,7,3).
struct Example {
  std::vector<Item> items = W({10, 9, 8, 7, 7, 3, 3, 2, 2});
  std::vector<Item> host_seed = Pick(items, {0});
  std::vector<Item> prior = Pick(items, {2, 7});  // (8,2)
  std::vector<Item> taken = Pick(items, {3, 5});  // (7,3)
  std::vector<Item> seed9 = Pick(items, {1});

  NogoodRecord Record(Weight host_bound = 20) const {
    return {prior, taken, host_seed, host_bound};
  }
  CandidateBin Bin(Weight bound = 20) const { return {seed9, bound, true}; }
};

TEST_CASE("pruning tokens") {
  for (Pruning p : {Pruning::kNone, Pruning::kNogood, Pruning::kNogoodDominance}) {
    CHECK(ParsePruning(ToString(p)) == p);
  }
  CHECK_FALSE(ParsePruning("all").has_value());
}

TEST_CASE("shape containment") {
  const auto items = W({8, 7, 7, 2, 2});
  CHECK(ContainsShapes(items, W({7, 2})));
  CHECK(ContainsShapes(items, W({7, 7})));
  CHECK_FALSE(ContainsShapes(items, W({7, 7, 7})));
  CHECK_FALSE(ContainsShapes(items, W({3})));
  CHECK(ContainsShapes(items, {}));
  // Values count as part of the shape.
  CHECK_FALSE(ContainsShapes(testing::WV({{5, 1}}), testing::WV({{5, 2}})));
}

TEST_CASE("nogood pruning on the worked example") {
  Example ex;
  const auto rec = ex.Record();
  // (9,8,2): holds S_j, and (9,7,3) is feasible.
  CHECK(NpPrunes(Pick(ex.items, {1, 2, 8}), rec, ex.Bin()));
  // (9,7,3) does not hold S_j.
  CHECK_FALSE(NpPrunes(Pick(ex.items, {1, 4, 6}), rec, ex.Bin()));
  // (9,7,2) is not a superset of (8,2).
  CHECK_FALSE(NpPrunes(Pick(ex.items, {1, 4, 8}), rec, ex.Bin()));
  // Swapping in a heavier S_i would overflow the candidate's bin.
  NogoodRecord heavy = rec;
  const auto big = Pick(ex.items, {1, 6});  // (9,3)
  heavy.taken = big;
  CHECK_FALSE(NpPrunes(Pick(ex.items, {1, 2, 8}), heavy, ex.Bin()));
}

TEST_CASE("nogood dominance pruning on the worked example") {
  Example ex;
  const auto rec = ex.Record();
  const auto kind = DominanceKind::kMtPacking;
  // (9,7,2): (8,2) dominates (7,2); (9,7,3) and (10,7,2) both fit.
  CHECK(NdpPrunes(Pick(ex.items, {1, 4, 8}), rec, ex.Bin(), kind));
  // Remainder equal to S_j: same verdict as NP.
  const auto same = Pick(ex.items, {1, 2, 8});
  CHECK(NdpPrunes(same, rec, ex.Bin(), kind) == NpPrunes(same, rec, ex.Bin()));
  CHECK(NdpPrunes(same, rec, ex.Bin(), kind));
  // Remainder (7,3) is not dominated by (8,2).
  CHECK_FALSE(NdpPrunes(Pick(ex.items, {1, 4, 6}), rec, ex.Bin(), kind));
  // The host cannot take the remainder back.
  CHECK_FALSE(NdpPrunes(Pick(ex.items, {1, 4, 8}), ex.Record(18), ex.Bin(),
                        kind));
}

TEST_CASE("combined pruning") {
  Example ex;
  NogoodStack stack;
  stack.Push({ex.Record()});
  const auto np_case = Pick(ex.items, {1, 2, 8});
  const auto ndp_case = Pick(ex.items, {1, 4, 8});

  PruningOptions none{Pruning::kNone, DominanceKind::kMtPacking, {}};
  PruningOptions np{Pruning::kNogood, DominanceKind::kMtPacking, {}};
  PruningOptions ndp{Pruning::kNogoodDominance, DominanceKind::kMtPacking, {}};
  CHECK_FALSE(ApplyPruning(np_case, ex.Bin(), stack, none, 2));
  CHECK(ApplyPruning(np_case, ex.Bin(), stack, np, 2));
  CHECK_FALSE(ApplyPruning(ndp_case, ex.Bin(), stack, np, 2));
  CHECK(ApplyPruning(np_case, ex.Bin(), stack, ndp, 2));
  CHECK(ApplyPruning(ndp_case, ex.Bin(), stack, ndp, 2));

  // Below the depth limit NDP is off but NP still applies.
  PruningOptions limited = ndp;
  limited.ndp_depth_limit = 1;
  CHECK(ApplyPruning(np_case, ex.Bin(), stack, limited, 2));
  CHECK_FALSE(ApplyPruning(ndp_case, ex.Bin(), stack, limited, 2));
  CHECK(ApplyPruning(ndp_case, ex.Bin(), stack, limited, 1));
}

TEST_CASE("NP pruning implies NDP pruning") {
  SplitMix64 rng(51);
  int np_hits = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto pool = testing::RandomItems(rng, 10, 1, 12, false);
    auto pick = [&](int k) {
      std::vector<Item> out;
      for (int i = 0; i < k; ++i) out.push_back(pool[rng.Uniform(0, 9)]);
      return out;
    };
    const auto prior = pick(static_cast<int>(rng.Uniform(1, 2)));
    const auto taken = pick(static_cast<int>(rng.Uniform(1, 2)));
    const auto host_seed = pick(1);
    const auto seed = pick(1);
    auto cand = pick(static_cast<int>(rng.Uniform(0, 3)));
    // Candidates usually contain S_j so NP has something to do.
    if (rng.Uniform(0, 1) == 0) cand.insert(cand.end(), prior.begin(), prior.end());
    cand.push_back(seed.front());
    NogoodStack stack;
    stack.Push({{prior, taken, host_seed, 30}});
    const CandidateBin bin{seed, 30, true};
    PruningOptions np{Pruning::kNogood, DominanceKind::kMtPacking, {}};
    PruningOptions ndp{Pruning::kNogoodDominance, DominanceKind::kMtPacking, {}};
    if (ApplyPruning(cand, bin, stack, np)) {
      ++np_hits;
      CHECK(ApplyPruning(cand, bin, stack, ndp));
    }
  }
  CHECK(np_hits > 100);
}

TEST_CASE("stack compaction") {
  Example ex;
  NogoodRecord keep = ex.Record();
  const auto other_prior = Pick(ex.items, {5});  // (3)
  keep.prior = other_prior;
  NogoodStack stack;
  stack.Push({ex.Record(), keep});
  stack.Push({});
  CHECK(stack.depth() == 2);
  CHECK(stack.record_count() == 2);

  // Both 8s gone: (8,2) can no longer occur.
  const auto remaining = W({9, 7, 3, 2});
  const auto compacted = CompactStack(stack, remaining, Pruning::kNogood);
  REQUIRE(compacted.depth() == 2);
  REQUIRE(compacted.frames()[0].size() == 1);
  CHECK(compacted.frames()[0][0].prior.size() == 1);

  const auto kept = CompactStack(stack, remaining, Pruning::kNogoodDominance);
  CHECK(kept.record_count() == 2);
  const auto with_eight = W({9, 8, 3, 2});
  CHECK(CompactStack(stack, with_eight, Pruning::kNogood).record_count() == 2);

  stack.Pop();
  stack.Pop();
  CHECK(stack.empty());
}

TEST_CASE("covering records use quotas") {
  // Covering siblings (60,45) and (60,50) share the 60; the host quota is 100.
  const auto items = W({60, 50, 45, 55, 48});
  const auto prior = Pick(items, {2});
  const auto taken = Pick(items, {1});
  const auto host_seed = Pick(items, {0});
  NogoodRecord rec{prior, taken, host_seed, 100};
  // Candidate (55,45): swapping 45 for 50 keeps 105 >= 100 here and the host
  // ends at (60,45) = 105.
  const auto seed = Pick(items, {3});
  const CandidateBin bin{seed, 100, false};
  CHECK(NpPrunes(Pick(items, {3, 2}), rec, bin));
  // Candidate (55,48): (45) dominates (48) under covering, and both bins
  // still meet the quota after the trade.
  CHECK(NdpPrunes(Pick(items, {3, 4}), rec, bin, DominanceKind::kCovering));
  // A quota the traded bin cannot meet blocks both.
  const CandidateBin strict{seed, 106, false};
  CHECK_FALSE(NpPrunes(Pick(items, {3, 2}), rec, strict));
}

}  // namespace
}  // namespace bincomp
