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

// The `bincomp` command line: generate, solve, bench, verify.

#ifndef BINCOMP_CLI_H_
#define BINCOMP_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bincomp/core.h"
#include "bincomp/nogood.h"
#include "bincomp/solvers.h"

namespace bincomp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,  // usage, I/O, refused request, invalid solution
  kExitParse = 2,
  kExitTimeLimit = 3,
  kExitNodeLimit = 4,
  kExitInfeasible = 5,
};

int ExitCodeFor(SolveStatus status);

enum class SolverName { kBinCompletion, kItemOriented, kOracle };

std::string_view ToString(SolverName s);
std::optional<SolverName> ParseSolverName(std::string_view token);

struct SolverChoice {
  SolverName name = SolverName::kBinCompletion;
  Pruning pruning = Pruning::kNogoodDominance;

  // "bc", "bc+np", "item", ...
  std::string Label() const;
};

// Parses "bc", "bc+none", "bc+np", "bc+ndp", "item" or "oracle".
std::optional<SolverChoice> ParseSolverChoice(std::string_view token);

SolveReport RunSolver(const Instance& inst, SolverChoice choice,
                      SolverConfig cfg);

// One line, fixed field order:
// kind= n= m= solver= pruning= status= objective= nodes= time=
// m is 0 for the uniform kinds.
std::string FormatRecord(const Instance& inst, SolverChoice choice,
                         const SolveReport& report);

struct BenchRun {
  std::string cls;
  ProblemKind kind = ProblemKind::kBinPacking;
  int n = 0;
  int m = 0;
  SolverChoice solver;
  SolveStatus status = SolveStatus::kOptimal;
  double seconds = 0.0;
  std::uint64_t nodes = 0;
};

struct BenchRow {
  std::string cls;
  ProblemKind kind = ProblemKind::kBinPacking;
  int n = 0;
  int m = 0;
  SolverChoice solver;
  int fail = 0;
  int solved = 0;
  // Over the runs that finished; 0 when none did.
  double mean_time = 0.0;
  double mean_nodes = 0.0;
};

// Runs stopped by a limit count as failures and stay out of the means.
// Rows are keyed by (class, kind, n, m, solver) and sorted by that key, so
// the result does not depend on the order of `runs`.
std::vector<BenchRow> AggregateBench(const std::vector<BenchRun>& runs);

inline constexpr const char* kBenchHeader =
    "class,kind,n,m,solver,pruning,fail,meanTime,meanNodes";

void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out);
void WriteBenchTable(const std::vector<BenchRow>& rows, std::ostream& out);

// Entry point shared by the executable and the tests.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bincomp::cli

#endif  // BINCOMP_CLI_H_
