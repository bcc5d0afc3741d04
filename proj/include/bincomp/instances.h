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

// Random instances, the filters applied to them, and the text formats for
// instances and solutions.
//
// Instance file (line oriented, '#' starts a comment):
//
//   kind <binpacking|mkp|bincovering|mccp>
//   containers <v1> <v2> ...
//   items <n>
//   <weight> [<value>]          (n lines)
//
// Comment lines of the form `# @key value` carry metadata (class, seed) that
// the bench command groups by.
//
// Solution file:
//
//   objective <v>               (optional)
//   bins <k>
//   <ids of bin 0>              (k lines, an empty line is an empty bin)
//   overflow <ids>              (optional)

#ifndef BINCOMP_INSTANCES_H_
#define BINCOMP_INSTANCES_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bincomp/core.h"
#include "bincomp/rng.h"

namespace bincomp {

enum class CorrelationClass {
  kUncorrelated,
  kWeaklyCorrelated,
  kStronglyCorrelated,
  kSubsetSum,
};

std::string_view ToString(CorrelationClass c);
std::optional<CorrelationClass> ParseCorrelationClass(std::string_view token);

struct GenSpec {
  ProblemKind kind = ProblemKind::kMkp;
  int n = 1;
  // Containers for MKP and MCCP; ignored by the uniform kinds.
  int m = 1;
  Weight min_weight = 1;
  Weight max_weight = 1;
  // Profit (MKP) or cost (MCCP) correlation; ignored by the uniform kinds.
  CorrelationClass cls = CorrelationClass::kUncorrelated;
  // Capacity (bin packing) or quota (bin covering).
  Weight bound = 1;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on an inconsistent spec.
void ValidateGenSpec(const GenSpec& spec);

// Items with ids 0..n-1. Values follow spec.cls for MKP/MCCP and are 0
// otherwise.
std::vector<Item> GenItems(const GenSpec& spec, SplitMix64& rng);
std::vector<Item> GenItems(const GenSpec& spec);

// First m-1 capacities uniform in [floor(4W/10m), floor(6W/10m)], the last
// takes floor(W/2) minus their sum; redrawn while the last is below 1.
// Throws std::runtime_error when no draw succeeds within the budget.
std::vector<Weight> GenMkpCapacities(const GenSpec& spec,
                                     std::span<const Item> items,
                                     SplitMix64& rng);

// Bounded retry budget shared by the generators.
inline constexpr int kGenerationAttempts = 1000;

// Full instance for the spec. MKP draws are repeated until the instance is
// not degenerate; throws std::runtime_error when the budget runs out.
Instance GenerateInstance(const GenSpec& spec);

// True iff some item fits no container, the smallest container is smaller
// than the smallest item, or the weight sum is below the largest capacity.
bool IsDegenerateMkp(const Instance& inst);

// True iff the greedy cover already meets the counting upper bound, so the
// solver closes the instance at the root.
bool IsTrivialCovering(const Instance& inst);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", " + field +
                           ": " + what),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

using Metadata = std::map<std::string, std::string>;

// Throws ParseError on malformed input. `meta` (optional) receives the
// `# @key value` lines.
Instance ReadInstance(std::istream& in, Metadata* meta = nullptr);
Instance ReadInstanceFile(const std::string& path, Metadata* meta = nullptr);

void WriteInstance(const Instance& inst, std::ostream& out,
                   const Metadata& meta = {});
void WriteInstanceFile(const Instance& inst, const std::string& path,
                       const Metadata& meta = {});

// A solution file as written, before any id is checked against an instance.
struct SolutionFile {
  std::optional<std::int64_t> objective;
  std::vector<std::vector<ItemId>> bins;
  std::vector<ItemId> overflow;
};

SolutionFile ReadSolution(std::istream& in);
SolutionFile ReadSolutionFile(const std::string& path);
void WriteSolution(const Solution& sol, std::ostream& out);
void WriteSolutionFile(const Solution& sol, const std::string& path);

// Checks a solution file against the instance: unknown and repeated ids are
// reported directly, everything else through ValidateSolution. A file with
// no objective line is checked without the objective comparison.
ValidationVerdict ValidateSolutionFile(const Instance& inst,
                                       const SolutionFile& file);

}  // namespace bincomp

#endif  // BINCOMP_INSTANCES_H_
