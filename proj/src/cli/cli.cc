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

#include "bincomp/cli.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "bincomp/instances.h"

namespace bincomp::cli {
namespace {

namespace fs = std::filesystem;

std::string Fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string JoinIds(const BinAssignment& a) {
  std::string out;
  for (ItemId id : a.ids()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id);
  }
  return out;
}

// Accepts a positive integer or "unbounded".
std::optional<int> ParseWidth(const std::string& text) {
  if (text == "unbounded") return kUnboundedWidth;
  try {
    std::size_t used = 0;
    const int h = std::stoi(text, &used);
    if (used != text.size() || h < 1) return std::nullopt;
    return h;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct GenerateArgs {
  std::string kind;
  std::string cls = "uncorrelated";
  int n = 0;
  int m = 1;
  std::vector<Weight> range;
  Weight bound = 0;
  int count = 1;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool nontrivial = false;
};

struct SolveArgs {
  std::string path;
  std::string solver = "bc";
  std::string pruning = "ndp";
  std::string ordering;
  std::string h;
  double time_limit = 300.0;
  std::optional<std::uint64_t> node_limit;
  std::uint64_t seed = 0;
  std::optional<int> ndp_depth;
  bool record = false;
  std::string solution_out;
};

struct BenchArgs {
  std::string dir;
  std::string solvers = "bc+np,bc+ndp";
  double time_limit = 300.0;
  std::optional<std::uint64_t> node_limit;
  int jobs = 1;
  std::string out;
};

struct VerifyArgs {
  std::string instance;
  std::string solution;
  bool against_oracle = false;
};

int CmdGenerate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<ProblemKind> kind = ParseProblemKind(a.kind);
  if (!kind) {
    err << "unknown kind '" << a.kind << "'\n";
    return kExitError;
  }
  std::optional<CorrelationClass> cls = ParseCorrelationClass(a.cls);
  if (!cls) {
    err << "unknown class '" << a.cls << "'\n";
    return kExitError;
  }
  if (a.nontrivial && *kind != ProblemKind::kBinCovering) {
    err << "--nontrivial applies to bincovering only\n";
    return kExitError;
  }
  GenSpec spec;
  spec.kind = *kind;
  spec.n = a.n;
  spec.m = a.m;
  spec.min_weight = a.range.at(0);
  spec.max_weight = a.range.at(1);
  spec.cls = *cls;
  spec.bound = a.bound;
  try {
    ValidateGenSpec(spec);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitError;
  }
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  std::string stem = std::string(ToString(*kind));
  if (!IsUniformKind(*kind)) stem += "-" + a.cls;
  stem += "-n" + std::to_string(a.n);
  stem += IsUniformKind(*kind) ? "-b" + std::to_string(a.bound)
                               : "-m" + std::to_string(a.m);

  std::uint64_t seed = a.seed;
  int rejected = 0;
  for (int written = 0; written < a.count; ++seed) {
    spec.seed = seed;
    std::optional<Instance> inst;
    try {
      inst = GenerateInstance(spec);
    } catch (const std::runtime_error&) {
    }
    const bool usable = inst && (!a.nontrivial || !IsTrivialCovering(*inst));
    if (!usable) {
      if (++rejected >= kGenerationAttempts) {
        err << "no usable instance after " << rejected
            << " consecutive rejections\n";
        return kExitError;
      }
      continue;
    }
    rejected = 0;
    Metadata meta{{"seed", std::to_string(seed)}};
    if (!IsUniformKind(*kind)) meta["class"] = a.cls;
    const fs::path path =
        fs::path(a.out_dir) / (stem + "-s" + std::to_string(seed) + ".txt");
    WriteInstanceFile(*inst, path.string(), meta);
    out << path.string() << '\n';
    ++written;
  }
  return kExitOk;
}

int CmdSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<SolverName> name = ParseSolverName(a.solver);
  std::optional<Pruning> pruning = ParsePruning(a.pruning);
  if (!name || !pruning) {
    err << "unknown " << (name ? "pruning '" + a.pruning : "solver '" + a.solver)
        << "'\n";
    return kExitError;
  }
  SolverConfig cfg;
  cfg.pruning = *pruning;
  cfg.time_limit_s = a.time_limit;
  cfg.node_limit = a.node_limit;
  cfg.rng_seed = a.seed;
  cfg.ndp_depth_limit = a.ndp_depth;
  if (!a.ordering.empty()) {
    cfg.ordering = ParseValueOrdering(a.ordering);
    if (!cfg.ordering) {
      err << "unknown ordering '" << a.ordering << "'\n";
      return kExitError;
    }
  }
  if (!a.h.empty()) {
    cfg.h = ParseWidth(a.h);
    if (!cfg.h) {
      err << "--h takes a positive integer or 'unbounded'\n";
      return kExitError;
    }
  }
  const Instance inst = ReadInstanceFile(a.path);
  const SolverChoice choice{*name, *pruning};
  if (*name == SolverName::kOracle && inst.num_items() > kExhaustiveMaxItems) {
    err << "oracle refused: " << inst.num_items() << " items, at most "
        << kExhaustiveMaxItems << " supported\n";
    return kExitError;
  }
  const SolveReport report = RunSolver(inst, choice, cfg);
  if (a.record) {
    out << FormatRecord(inst, choice, report) << '\n';
  } else {
    out << "status    " << ToString(report.status) << '\n'
        << "objective " << report.objective << '\n'
        << "nodes     " << report.nodes << '\n'
        << "time      " << Fixed(report.elapsed_s, 6) << " s\n";
    for (std::size_t b = 0; b < report.solution.bins.size(); ++b) {
      out << "bin " << b << ": " << JoinIds(report.solution.bins[b]) << '\n';
    }
    if (!report.solution.overflow.empty()) {
      out << "overflow: " << JoinIds(report.solution.overflow) << '\n';
    }
  }
  if (!a.solution_out.empty()) {
    WriteSolutionFile(report.solution, a.solution_out);
  }
  return ExitCodeFor(report.status);
}

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<SolverChoice> solvers;
  std::stringstream list(a.solvers);
  for (std::string tok; std::getline(list, tok, ',');) {
    std::optional<SolverChoice> c = ParseSolverChoice(tok);
    if (!c) {
      err << "unknown solver '" << tok << "'\n";
      return kExitError;
    }
    solvers.push_back(*c);
  }
  if (solvers.empty()) {
    err << "no solvers given\n";
    return kExitError;
  }
  if (!fs::is_directory(a.dir)) {
    err << "not a directory: " << a.dir << '\n';
    return kExitError;
  }
  std::vector<fs::path> files;
  for (const fs::directory_entry& e : fs::directory_iterator(a.dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "no instances in " << a.dir << '\n';
    return kExitError;
  }
  std::vector<Instance> instances;
  std::vector<std::string> classes;
  for (const fs::path& p : files) {
    Metadata meta;
    try {
      instances.push_back(ReadInstanceFile(p.string(), &meta));
    } catch (const ParseError& e) {
      err << p.string() << ": " << e.what() << '\n';
      return kExitParse;
    }
    auto it = meta.find("class");
    classes.push_back(it == meta.end() ? "-" : it->second);
  }

  const std::size_t total = instances.size() * solvers.size();
  std::vector<BenchRun> runs(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      const std::size_t i = job / solvers.size();
      const SolverChoice choice = solvers[job % solvers.size()];
      SolverConfig cfg;
      cfg.pruning = choice.pruning;
      cfg.time_limit_s = a.time_limit;
      cfg.node_limit = a.node_limit;
      const Instance& inst = instances[i];
      BenchRun& r = runs[job];
      r.cls = classes[i];
      r.kind = inst.kind();
      r.n = inst.num_items();
      r.m = IsUniformKind(inst.kind()) ? 0 : inst.num_containers();
      r.solver = choice;
      if (choice.name == SolverName::kOracle &&
          inst.num_items() > kExhaustiveMaxItems) {
        r.status = SolveStatus::kTimeLimit;
        continue;
      }
      const SolveReport report = RunSolver(inst, choice, cfg);
      r.status = report.status;
      r.seconds = report.elapsed_s;
      r.nodes = report.nodes;
    }
  };
  const int jobs = std::max(1, a.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  const std::vector<BenchRow> rows = AggregateBench(runs);
  WriteBenchTable(rows, out);
  if (a.out.empty()) {
    out << '\n';
    WriteBenchCsv(rows, out);
  } else {
    std::ofstream csv(a.out);
    if (!csv) {
      err << "cannot write " << a.out << '\n';
      return kExitError;
    }
    WriteBenchCsv(rows, csv);
  }
  return kExitOk;
}

int CmdVerify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = ReadInstanceFile(a.instance);
  const SolutionFile file = ReadSolutionFile(a.solution);
  const ValidationVerdict verdict = ValidateSolutionFile(inst, file);
  for (const Violation& v : verdict.violations) {
    out << "violation " << ToString(v.code) << ": " << v.detail << '\n';
  }
  if (!verdict.ok()) return kExitError;
  out << "valid, objective " << verdict.recomputed_objective << '\n';
  if (a.against_oracle) {
    if (inst.num_items() > kExhaustiveMaxItems) {
      err << "oracle check refused: more than " << kExhaustiveMaxItems
          << " items\n";
      return kExitError;
    }
    const SolveReport best = SolveExhaustive(inst);
    if (best.status == SolveStatus::kInfeasible) {
      out << "objective-gap: instance is infeasible\n";
      return kExitError;
    }
    if (best.objective != verdict.recomputed_objective) {
      out << "objective-gap: solution " << verdict.recomputed_objective
          << ", optimum " << best.objective << '\n';
      return kExitError;
    }
    out << "matches the optimum\n";
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kTimeLimit:
      return kExitTimeLimit;
    case SolveStatus::kNodeLimit:
      return kExitNodeLimit;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
  }
  return kExitError;
}

std::string_view ToString(SolverName s) {
  switch (s) {
    case SolverName::kBinCompletion:
      return "bc";
    case SolverName::kItemOriented:
      return "item";
    case SolverName::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::optional<SolverName> ParseSolverName(std::string_view token) {
  for (SolverName s : {SolverName::kBinCompletion, SolverName::kItemOriented,
                       SolverName::kOracle}) {
    if (token == ToString(s)) return s;
  }
  return std::nullopt;
}

std::string SolverChoice::Label() const {
  std::string label(ToString(name));
  if (name == SolverName::kBinCompletion) {
    label += "+" + std::string(ToString(pruning));
  }
  return label;
}

std::optional<SolverChoice> ParseSolverChoice(std::string_view token) {
  const std::size_t plus = token.find('+');
  std::optional<SolverName> name = ParseSolverName(token.substr(0, plus));
  if (!name) return std::nullopt;
  SolverChoice c{*name, Pruning::kNogoodDominance};
  if (plus == std::string_view::npos) return c;
  if (*name != SolverName::kBinCompletion) return std::nullopt;
  std::optional<Pruning> p = ParsePruning(token.substr(plus + 1));
  if (!p) return std::nullopt;
  c.pruning = *p;
  return c;
}

SolveReport RunSolver(const Instance& inst, SolverChoice choice,
                      SolverConfig cfg) {
  switch (choice.name) {
    case SolverName::kBinCompletion:
      cfg.pruning = choice.pruning;
      return SolveBinCompletion(inst, cfg);
    case SolverName::kItemOriented:
      return SolveItemOriented(inst, cfg);
    case SolverName::kOracle:
      return SolveExhaustive(inst);
  }
  throw std::invalid_argument("unknown solver");
}

std::string FormatRecord(const Instance& inst, SolverChoice choice,
                         const SolveReport& report) {
  std::ostringstream s;
  s << "kind=" << ToString(inst.kind()) << " n=" << inst.num_items()
    << " m=" << (IsUniformKind(inst.kind()) ? 0 : inst.num_containers())
    << " solver=" << ToString(choice.name) << " pruning="
    << (choice.name == SolverName::kBinCompletion ? ToString(choice.pruning)
                                                  : "-")
    << " status=" << ToString(report.status)
    << " objective=" << report.objective << " nodes=" << report.nodes
    << " time=" << Fixed(report.elapsed_s, 6);
  return s.str();
}

std::vector<BenchRow> AggregateBench(const std::vector<BenchRun>& runs) {
  using Key = std::tuple<std::string, int, int, int, std::string>;
  std::map<Key, BenchRow> rows;
  std::map<Key, std::pair<double, double>> sums;
  for (const BenchRun& r : runs) {
    const Key key{r.cls, static_cast<int>(r.kind), r.n, r.m, r.solver.Label()};
    BenchRow& row = rows[key];
    row.cls = r.cls;
    row.kind = r.kind;
    row.n = r.n;
    row.m = r.m;
    row.solver = r.solver;
    const bool finished = r.status == SolveStatus::kOptimal ||
                          r.status == SolveStatus::kInfeasible;
    if (!finished) {
      ++row.fail;
      continue;
    }
    ++row.solved;
    sums[key].first += r.seconds;
    sums[key].second += static_cast<double>(r.nodes);
  }
  std::vector<BenchRow> out;
  for (auto& [key, row] : rows) {
    if (row.solved > 0) {
      row.mean_time = sums[key].first / row.solved;
      row.mean_nodes = sums[key].second / row.solved;
    }
    out.push_back(row);
  }
  return out;
}

void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.cls << ',' << ToString(r.kind) << ',' << r.n << ',' << r.m << ','
        << ToString(r.solver.name) << ','
        << (r.solver.name == SolverName::kBinCompletion
                ? ToString(r.solver.pruning)
                : "-")
        << ',' << r.fail << ',' << Fixed(r.mean_time, 6) << ','
        << Fixed(r.mean_nodes, 1) << '\n';
  }
}

void WriteBenchTable(const std::vector<BenchRow>& rows, std::ostream& out) {
  const std::vector<std::string> head{"class", "kind",  "n",    "m",
                                      "solver", "fail", "time", "nodes"};
  std::vector<std::vector<std::string>> cells;
  for (const BenchRow& r : rows) {
    cells.push_back({r.cls, std::string(ToString(r.kind)), std::to_string(r.n),
                     std::to_string(r.m), r.solver.Label(),
                     std::to_string(r.fail), Fixed(r.mean_time, 4),
                     Fixed(r.mean_nodes, 1)});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      // Text columns left, numbers right.
      if (c == 0 || c == 1 || c == 4) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
      out << (c + 1 < row.size() ? "  " : "\n");
    }
  };
  line(head);
  for (const auto& row : cells) line(row);
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact bin-oriented solvers for packing and covering problems",
               "bincomp"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "write random instances");
  generate->add_option("--kind", gen.kind, "binpacking|mkp|bincovering|mccp")
      ->required();
  generate->add_option("--class", gen.cls,
                       "uncorrelated|weakly|strongly|subsetsum");
  generate->add_option("--n", gen.n, "items")->required();
  generate->add_option("--m", gen.m, "containers (mkp, mccp)");
  generate->add_option("--range", gen.range, "min and max weight")
      ->expected(2)
      ->required();
  generate->add_option("--bound,--capacity,--quota", gen.bound,
                       "capacity or quota (binpacking, bincovering)");
  generate->add_option("--count", gen.count, "instances to write");
  generate->add_option("--seed", gen.seed, "first seed");
  generate->add_option("--out", gen.out_dir, "output directory");
  generate->add_flag("--nontrivial", gen.nontrivial,
                     "skip covering instances closed at the root");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
  // --h is the batch width here, so help is long-form only.
  solve_cmd->set_help_flag("--help", "print this help and exit");
  solve_cmd->add_option("instance", solve.path)->required();
  solve_cmd->add_option("--solver", solve.solver, "bc|item|oracle");
  solve_cmd->add_option("--pruning", solve.pruning, "none|np|ndp");
  solve_cmd->add_option("--ordering", solve.ordering,
                        "min-card-max-profit|min-weight|min-card-min-sum|"
                        "min-card-max-weight|generation");
  solve_cmd->add_option("--h", solve.h, "children per batch or 'unbounded'");
  solve_cmd->add_option("--time-limit", solve.time_limit, "seconds");
  solve_cmd->add_option("--node-limit", solve.node_limit);
  solve_cmd->add_option("--seed", solve.seed, "tie-break seed");
  solve_cmd->add_option("--ndp-depth", solve.ndp_depth);
  solve_cmd->add_flag("--record", solve.record, "single-line output");
  solve_cmd->add_option("--solution-out", solve.solution_out);

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run solvers on a suite");
  bench_cmd->add_option("dir", bench.dir)->required();
  bench_cmd->add_option("--solvers", bench.solvers,
                        "comma list: bc+none, bc+np, bc+ndp, item, oracle");
  bench_cmd->add_option("--time-limit", bench.time_limit, "seconds");
  bench_cmd->add_option("--node-limit", bench.node_limit);
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads");
  bench_cmd->add_option("--out", bench.out, "CSV output path");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution file");
  verify_cmd->add_option("instance", verify.instance)->required();
  verify_cmd->add_option("solution", verify.solution)->required();
  verify_cmd->add_flag("--against-oracle", verify.against_oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (generate->parsed()) return CmdGenerate(gen, out, err);
    if (solve_cmd->parsed()) return CmdSolve(solve, out, err);
    if (bench_cmd->parsed()) return CmdBench(bench, out, err);
    if (verify_cmd->parsed()) return CmdVerify(verify, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace bincomp::cli
