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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Pass criterion numbers as arguments to
// run a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bincomp/dominance.h"
#include "bincomp/gen.h"
#include "bincomp/instances.h"
#include "bincomp/nogood.h"
#include "bincomp/solvers.h"
#include "helpers.h"
#include "oracles.h"

namespace bincomp {
namespace {

using Clock = std::chrono::steady_clock;
using testing::Pick;
using testing::Shape;
using testing::ShapeOf;
using testing::W;

// Thresholds.
constexpr double kGoldenSeconds = 1.0;
constexpr int kOracleInstancesPerKind = 200;
constexpr int kOracleMaxItems = 12;
constexpr int kOracleMaxBins = 4;
constexpr double kOracleSeconds = 300.0;
constexpr int kDominancePairs = 10000;
constexpr int kDominanceMaxCard = 6;
constexpr double kDominanceSeconds = 120.0;
constexpr int kGeneratorPools = 500;
constexpr int kGeneratorMaxItems = 14;
constexpr double kGeneratorSeconds = 300.0;
constexpr int kMkpInstances = 30;
constexpr double kMkpSecondsEach = 5.0;
constexpr std::uint64_t kMkpNodesEach = 10000;
constexpr double kMkpMedianRatio = 100.0;
constexpr double kBaselineSeconds = 60.0;
constexpr int kTrivialInstances = 1000;
constexpr double kTrivialSeconds = 600.0;
constexpr int kWidthInstances = 20;
constexpr int kWidthItems = 40;
constexpr std::uint64_t kWidthNodeCap = 50;
constexpr int kWidthRepeats = 5;
// The largest width; stands in for "all children at once".
constexpr int kWidthCapped = 10000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void Add(const std::string& what) {
    if (count_++ < 5) first_ << (first_.tellp() > 0 ? "; " : "") << what;
  }
  int count() const { return count_; }
  std::string Summary() const {
    return std::to_string(count_) + " mismatches" +
           (count_ ? " (" + first_.str() + ")" : "");
  }

 private:
  int count_ = 0;
  std::ostringstream first_;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

template <typename T>
T Median(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return T{};
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

constexpr ProblemKind kKinds[] = {ProblemKind::kBinPacking, ProblemKind::kMkp,
                                  ProblemKind::kBinCovering, ProblemKind::kMccp};

// 1. Worked examples.
Outcome Goldens() {
  const auto start = Clock::now();
  Failures f;
  Instance intro(ProblemKind::kBinPacking, {100}, W({82, 43, 40, 15, 12, 6}));
  if (SolveBinPacking(intro).objective != 2) f.Add("intro != 2 bins");
  const auto fig2 = W({83, 42, 41, 40, 12, 11, 5});
  Instance fig2_inst(ProblemKind::kBinPacking, {100}, fig2);
  if (SolveBinPacking(fig2_inst).objective != 3) f.Add("pool of seven != 3 bins");

  auto cur = GenCursor::Open(ProblemKind::kBinPacking, 100, fig2, 0);
  const auto emitted = cur ? cur->All() : std::vector<BinAssignment>{};
  if (emitted.size() != 1 ||
      testing::Weights(emitted[0].items()) != std::vector<Weight>{83, 12, 5}) {
    f.Add("generator seeded with 83 did not emit exactly (83,12,5)");
  }

  const auto a = W({96, 4});
  std::vector<Item> b = {{2, 96, 0}, {3, 3, 0}};
  if (!MtDominatesPacking(a, b)) f.Add("(96,4) !> (96,3)");
  std::vector<Item> nine_seven = {{2, 9, 0}, {3, 7, 0}};
  if (!CmtDominates(W({10, 8}), nine_seven) ||
      !MtDominatesPacking(W({10, 8}), nine_seven)) {
    f.Add("(10,8) !> (9,7)");
  }
  std::vector<Item> six_two_one = {{2, 6, 0}, {3, 2, 0}, {4, 1, 0}};
  if (!MtDominatesPacking(W({6, 4}), six_two_one)) f.Add("(6,4) !> (6,2,1)");
  if (CmtDominates(W({6, 4}), six_two_one)) f.Add("CMT accepts (6,4) > (6,2,1)");

  const auto items = W({10, 9, 8, 7, 7, 3, 3, 2, 2});
  const auto host_seed = Pick(items, {0});
  const auto prior = Pick(items, {2, 7});
  const auto taken = Pick(items, {3, 5});
  const auto seed = Pick(items, {1});
  NogoodStack stack;
  stack.Push({{prior, taken, host_seed, 20}});
  const CandidateBin bin{seed, 20, true};
  const PruningOptions np{Pruning::kNogood, DominanceKind::kMtPacking, {}};
  const PruningOptions ndp{Pruning::kNogoodDominance, DominanceKind::kMtPacking,
                           {}};
  const auto c982 = Pick(items, {1, 2, 8});
  const auto c972 = Pick(items, {1, 4, 8});
  if (!ApplyPruning(c982, bin, stack, np)) f.Add("NP keeps (9,8,2)");
  if (ApplyPruning(c972, bin, stack, np)) f.Add("NP prunes (9,7,2)");
  if (!ApplyPruning(c972, bin, stack, ndp)) f.Add("NDP keeps (9,7,2)");

  const double secs = Seconds(start);
  if (secs >= kGoldenSeconds) f.Add("took " + Fmt(secs) + " s");
  return {f.count() == 0, f.Summary() + ", " + Fmt(secs) + " s"};
}

// Shared by criteria 2 and 5.
const std::vector<Instance>& OracleSuite(ProblemKind kind) {
  static std::map<ProblemKind, std::vector<Instance>> suites;
  auto& suite = suites[kind];
  if (suite.empty()) {
    SplitMix64 rng(1000 + static_cast<int>(kind));
    for (int i = 0; i < kOracleInstancesPerKind; ++i) {
      suite.push_back(testing::RandomInstance(rng, kind, kOracleMaxItems,
                                              kOracleMaxBins, 4));
    }
  }
  return suite;
}

// 2. Every solver agrees with the exhaustive oracle.
Outcome OracleEquivalence() {
  const auto start = Clock::now();
  Failures f;
  int checked = 0;
  for (ProblemKind kind : kKinds) {
    int i = 0;
    for (const Instance& inst : OracleSuite(kind)) {
      const auto oracle = SolveExhaustive(inst);
      std::vector<std::pair<std::string, SolveReport>> runs = {
          {"item", SolveItemOriented(inst)}};
      for (Pruning p : {Pruning::kNone, Pruning::kNogood,
                        Pruning::kNogoodDominance}) {
        SolverConfig cfg;
        cfg.pruning = p;
        runs.emplace_back("bc+" + std::string(ToString(p)),
                          SolveBinCompletion(inst, cfg));
      }
      for (const auto& [name, r] : runs) {
        const bool same = r.status == oracle.status &&
                          (r.status == SolveStatus::kInfeasible ||
                           r.objective == oracle.objective);
        if (!same) {
          f.Add(std::string(ToString(kind)) + " #" + std::to_string(i) + " " +
                name + " " + std::to_string(r.objective) + " vs " +
                std::to_string(oracle.objective));
        }
      }
      ++checked;
      ++i;
    }
  }
  const double secs = Seconds(start);
  if (secs >= kOracleSeconds) f.Add("took " + Fmt(secs) + " s");
  return {f.count() == 0, std::to_string(checked) + " instances, " +
                              f.Summary() + ", " + Fmt(secs) + " s"};
}

// 3. Dominance predicates against brute-force enumeration.
Outcome DominanceEquivalence() {
  const auto start = Clock::now();
  Failures f;
  SplitMix64 rng(3000);
  int implication_checks = 0;
  int positives = 0;
  for (DominanceKind kind :
       {DominanceKind::kCmtPacking, DominanceKind::kMtPacking,
        DominanceKind::kCovering, DominanceKind::kMkpPacking,
        DominanceKind::kMccpCovering}) {
    for (int i = 0; i < kDominancePairs; ++i) {
      const auto [a, b] = testing::RandomDominancePair(rng, kind);
      if (static_cast<int>(a.size()) > kDominanceMaxCard ||
          static_cast<int>(b.size()) > kDominanceMaxCard) {
        f.Add("pair exceeds the cardinality cap");
      }
      const bool fast = Dominates(kind, a, b);
      positives += fast ? 1 : 0;
      if (fast != testing::BruteDominates(kind, a, b)) {
        f.Add(std::string(ToString(kind)) + " pair " + std::to_string(i));
      }
      ++implication_checks;
      if (CmtDominates(a, b) && !MtDominatesPacking(a, b)) {
        f.Add("CMT without MT on pair " + std::to_string(i));
      }
    }
  }
  const double secs = Seconds(start);
  if (secs >= kDominanceSeconds) f.Add("took " + Fmt(secs) + " s");
  return {f.count() == 0,
          std::to_string(5 * kDominancePairs) + " pairs (" +
              std::to_string(positives) + " dominated), " +
              std::to_string(implication_checks) + " implication checks, " +
              f.Summary() + ", " + Fmt(secs) + " s"};
}

// 4. Generator output against brute-force undominated sets.
Outcome GeneratorExactness() {
  const auto start = Clock::now();
  Failures f;
  SplitMix64 rng(4000);
  long packing_sets = 0;
  long covering_sets = 0;
  for (int p = 0; p < kGeneratorPools; ++p) {
    const int n = static_cast<int>(rng.Uniform(4, kGeneratorMaxItems));
    const bool valued = p % 2 == 1;
    auto pool = testing::RandomItems(rng, n, 1, 30, valued);
    SortCanonical(pool);
    const Weight bound = rng.Uniform(30, 70);
    // Bin packing and covering seed with the largest item; MKP and MCCP
    // generate freely.
    const std::optional<ItemId> req =
        valued ? std::nullopt : std::optional<ItemId>(pool.front().id);

    const ProblemKind pk = valued ? ProblemKind::kMkp : ProblemKind::kBinPacking;
    std::set<Shape> emitted;
    bool repeated = false;
    if (auto cur = GenCursor::Open(pk, bound, pool, req)) {
      for (const auto& a : cur->All()) {
        repeated = !emitted.insert(ShapeOf(a.items())).second || repeated;
      }
    }
    const auto expect = testing::UndominatedPacking(pool, bound, req, valued);
    if (repeated || emitted != expect) {
      f.Add("packing pool " + std::to_string(p) + ": emitted " +
            std::to_string(emitted.size()) + ", expected " +
            std::to_string(expect.size()) + (repeated ? ", repeats" : ""));
    }
    packing_sets += static_cast<long>(expect.size());

    const ProblemKind ck = valued ? ProblemKind::kMccp : ProblemKind::kBinCovering;
    std::set<Shape> covers;
    if (auto cur = GenCursor::Open(ck, bound, pool, req)) {
      for (const auto& a : cur->All()) covers.insert(ShapeOf(a.items()));
    }
    const auto undominated = testing::UndominatedCovering(pool, bound, req, valued);
    const auto minimal = testing::MinimalCovering(pool, bound, req);
    if (!std::includes(covers.begin(), covers.end(), undominated.begin(),
                       undominated.end())) {
      f.Add("covering pool " + std::to_string(p) + " misses an undominated set");
    }
    if (!std::includes(minimal.begin(), minimal.end(), covers.begin(),
                       covers.end())) {
      f.Add("covering pool " + std::to_string(p) + " emits a non-minimal set");
    }
    covering_sets += static_cast<long>(covers.size());
  }
  const double secs = Seconds(start);
  if (secs >= kGeneratorSeconds) f.Add("took " + Fmt(secs) + " s");
  return {f.count() == 0, std::to_string(kGeneratorPools) + " pools, " +
                              std::to_string(packing_sets) + " packing and " +
                              std::to_string(covering_sets) +
                              " covering sets, " + f.Summary() + ", " +
                              Fmt(secs) + " s"};
}

// 5. NDP <= NP <= None in nodes, generation order.
Outcome NodeMonotonicity() {
  Failures f;
  int checked = 0;
  for (ProblemKind kind : kKinds) {
    int i = 0;
    for (const Instance& inst : OracleSuite(kind)) {
      SolverConfig cfg;
      cfg.ordering = ValueOrdering::kGenerationOrder;
      cfg.rng_seed = 5;
      std::vector<std::uint64_t> nodes;
      for (Pruning p : {Pruning::kNone, Pruning::kNogood,
                        Pruning::kNogoodDominance}) {
        cfg.pruning = p;
        nodes.push_back(SolveBinCompletion(inst, cfg).nodes);
      }
      if (!(nodes[2] <= nodes[1] && nodes[1] <= nodes[0])) {
        f.Add(std::string(ToString(kind)) + " #" + std::to_string(i) + " " +
              std::to_string(nodes[0]) + "/" + std::to_string(nodes[1]) + "/" +
              std::to_string(nodes[2]));
      }
      ++checked;
      ++i;
    }
  }
  return {f.count() == 0, std::to_string(checked) + " instances, " +
                              std::to_string(f.count()) + " violations" +
                              (f.count() ? " (" + f.Summary() + ")" : "")};
}

// 6. Subset-sum MKP, n=20, m=10: bin completion against the item-oriented
// baseline.
Outcome MkpTrend() {
  Failures f;
  std::vector<std::uint64_t> bc_nodes;
  std::vector<std::uint64_t> item_nodes;
  double bc_max_time = 0.0;
  int solved = 0;
  for (int s = 1; s <= kMkpInstances; ++s) {
    GenSpec spec;
    spec.kind = ProblemKind::kMkp;
    spec.n = 20;
    spec.m = 10;
    spec.min_weight = 10;
    spec.max_weight = 1000;
    spec.cls = CorrelationClass::kSubsetSum;
    spec.seed = static_cast<std::uint64_t>(s);
    const Instance inst = GenerateInstance(spec);

    SolverConfig cfg;
    cfg.time_limit_s = kMkpSecondsEach;
    const auto bc = SolveMkp(inst, cfg);
    const bool ok = bc.status == SolveStatus::kOptimal &&
                    bc.elapsed_s <= kMkpSecondsEach && bc.nodes <= kMkpNodesEach;
    if (ok) {
      ++solved;
    } else {
      f.Add("seed " + std::to_string(s) + " " + std::string(ToString(bc.status)) +
            " nodes " + std::to_string(bc.nodes));
    }
    bc_nodes.push_back(bc.nodes);
    bc_max_time = std::max(bc_max_time, bc.elapsed_s);

    SolverConfig base;
    base.time_limit_s = kBaselineSeconds;
    item_nodes.push_back(SolveItemOriented(inst, base).nodes);
  }
  const double bc_median = Median(bc_nodes);
  const double item_median = Median(item_nodes);
  const double ratio = bc_median > 0 ? item_median / bc_median : 0.0;
  if (ratio < kMkpMedianRatio) {
    f.Add("median ratio " + Fmt(ratio) + " < " + Fmt(kMkpMedianRatio));
  }
  return {f.count() == 0,
          "bc+ndp solved " + std::to_string(solved) + "/" +
              std::to_string(kMkpInstances) + " (max " + Fmt(bc_max_time) +
              " s, max nodes " +
              std::to_string(*std::max_element(bc_nodes.begin(), bc_nodes.end())) +
              "), median nodes bc+ndp " + Fmt(bc_median) + " vs item " +
              Fmt(item_median) + " (ratio " + Fmt(ratio) + ", need >= " +
              Fmt(kMkpMedianRatio) + ")" +
              (f.count() ? "; " + f.Summary() : "")};
}

// 7. Triviality filter agrees with the solver.
Outcome TrivialRate() {
  const auto start = Clock::now();
  Failures f;
  int trivial = 0;
  for (int s = 1; s <= kTrivialInstances; ++s) {
    GenSpec spec;
    spec.kind = ProblemKind::kBinCovering;
    spec.n = 120;
    spec.min_weight = 1;
    spec.max_weight = 99999;
    spec.bound = 100000;
    spec.seed = static_cast<std::uint64_t>(s);
    const Instance inst = GenerateInstance(spec);
    if (!IsTrivialCovering(inst)) continue;
    ++trivial;
    const auto r = SolveBinCovering(inst);
    if (r.status != SolveStatus::kOptimal || r.nodes != 1) {
      f.Add("seed " + std::to_string(s) + " took " + std::to_string(r.nodes) +
            " nodes");
    }
  }
  // The large population rarely closes at the root with these bounds, so
  // the consistency check also runs on small instances where it does.
  int small_trivial = 0;
  for (int s = 1; s <= kTrivialInstances; ++s) {
    GenSpec spec;
    spec.kind = ProblemKind::kBinCovering;
    spec.n = 12;
    spec.min_weight = 1;
    spec.max_weight = 99;
    spec.bound = 100;
    spec.seed = static_cast<std::uint64_t>(s);
    const Instance inst = GenerateInstance(spec);
    if (!IsTrivialCovering(inst)) continue;
    ++small_trivial;
    const auto r = SolveBinCovering(inst);
    if (r.status != SolveStatus::kOptimal || r.nodes != 1) {
      f.Add("small seed " + std::to_string(s) + " took " +
            std::to_string(r.nodes) + " nodes");
    }
  }
  const double secs = Seconds(start);
  if (secs >= kTrivialSeconds) f.Add("took " + Fmt(secs) + " s");
  return {f.count() == 0,
          "trivial fraction " + std::to_string(trivial) + "/" +
              std::to_string(kTrivialInstances) + " = " +
              Fmt(100.0 * trivial / kTrivialInstances) +
              "% (n=12, q=100: " + std::to_string(small_trivial) + "/" +
              std::to_string(kTrivialInstances) + "), " + f.Summary() + ", " +
              Fmt(secs) + " s"};
}

// 8. Batch width changes time, never the optimum.
Outcome WidthInvariance() {
  Failures f;
  const std::vector<int> widths = {2, 20, 100, kWidthCapped};
  std::vector<Instance> suite;
  for (std::uint64_t s = 1; static_cast<int>(suite.size()) < kWidthInstances;
       ++s) {
    GenSpec spec;
    spec.kind = ProblemKind::kBinCovering;
    spec.n = kWidthItems;
    spec.min_weight = 1;
    spec.max_weight = 9999;
    spec.bound = 20000;
    spec.seed = s;
    Instance inst = GenerateInstance(spec);
    if (!IsTrivialCovering(inst)) suite.push_back(std::move(inst));
  }
  std::vector<std::vector<double>> times(widths.size());
  int small = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    std::vector<std::int64_t> objectives;
    std::vector<double> best(widths.size());
    std::uint64_t most_nodes = 0;
    for (std::size_t w = 0; w < widths.size(); ++w) {
      SolverConfig cfg;
      cfg.h = widths[w];
      double fastest = 1e300;
      SolveReport r;
      for (int rep = 0; rep < kWidthRepeats; ++rep) {
        r = SolveBinCovering(suite[i], cfg);
        fastest = std::min(fastest, r.elapsed_s);
      }
      if (r.status != SolveStatus::kOptimal) {
        f.Add("instance " + std::to_string(i) + " h=" +
              std::to_string(widths[w]) + " " + std::string(ToString(r.status)));
      }
      objectives.push_back(r.objective);
      best[w] = fastest;
      most_nodes = std::max(most_nodes, r.nodes);
    }
    if (std::adjacent_find(objectives.begin(), objectives.end(),
                           std::not_equal_to<>()) != objectives.end()) {
      f.Add("instance " + std::to_string(i) + " objective varies with h");
    }
    if (most_nodes <= kWidthNodeCap) {
      ++small;
      for (std::size_t w = 0; w < widths.size(); ++w) times[w].push_back(best[w]);
    }
  }
  std::vector<double> medians;
  std::string shown;
  for (std::size_t w = 0; w < widths.size(); ++w) {
    medians.push_back(Median(times[w]));
    shown += (w ? ", " : "") + std::string("h=") + std::to_string(widths[w]) +
             " " + Fmt(medians.back()) + " s";
  }
  if (small == 0) f.Add("no instance solved within the node cap");
  for (std::size_t w = 1; w < medians.size(); ++w) {
    if (medians[w - 1] > medians[w]) {
      f.Add("median time rises as h drops to " + std::to_string(widths[w - 1]));
    }
  }
  return {f.count() == 0, std::to_string(suite.size()) + " instances (" +
                              std::to_string(small) + " within " +
                              std::to_string(kWidthNodeCap) +
                              " nodes), median times " + shown + ", " +
                              f.Summary()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace bincomp

int main(int argc, char** argv) {
  using namespace bincomp;
  const std::vector<Criterion> all = {
      {1, "worked-example goldens", Goldens},
      {2, "oracle equivalence", OracleEquivalence},
      {3, "dominance predicates vs enumeration", DominanceEquivalence},
      {4, "generator exactness", GeneratorExactness},
      {5, "node monotonicity", NodeMonotonicity},
      {6, "subset-sum MKP trend", MkpTrend},
      {7, "trivial covering filter", TrivialRate},
      {8, "batch width invariance", WidthInvariance},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name
              << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
