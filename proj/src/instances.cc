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

#include "bincomp/instances.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bincomp/bounds.h"

namespace bincomp {
namespace {

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::optional<std::int64_t> ToInt(std::string_view s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::int64_t IntField(std::string_view s, int line, const std::string& field) {
  std::optional<std::int64_t> v = ToInt(s);
  if (!v) throw ParseError(line, field, "expected an integer, got '" +
                                            std::string(s) + "'");
  return *v;
}

// Splits off a trailing comment. Full-line `# @key value` comments are
// reported through `meta`.
std::string StripComment(const std::string& line, Metadata* meta) {
  const std::size_t hash = line.find('#');
  if (hash == std::string::npos) return line;
  if (meta != nullptr) {
    std::vector<std::string> t = Tokens(std::string_view(line).substr(hash + 1));
    if (line.find_first_not_of(" \t") == hash && t.size() >= 2 &&
        t[0].size() > 1 && t[0][0] == '@') {
      std::string value = t[1];
      for (std::size_t i = 2; i < t.size(); ++i) value += " " + t[i];
      (*meta)[t[0].substr(1)] = value;
    }
  }
  return line.substr(0, hash);
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

}  // namespace

std::string_view ToString(CorrelationClass c) {
  switch (c) {
    case CorrelationClass::kUncorrelated:
      return "uncorrelated";
    case CorrelationClass::kWeaklyCorrelated:
      return "weakly";
    case CorrelationClass::kStronglyCorrelated:
      return "strongly";
    case CorrelationClass::kSubsetSum:
      return "subsetsum";
  }
  return "unknown";
}

std::optional<CorrelationClass> ParseCorrelationClass(std::string_view token) {
  for (CorrelationClass c :
       {CorrelationClass::kUncorrelated, CorrelationClass::kWeaklyCorrelated,
        CorrelationClass::kStronglyCorrelated, CorrelationClass::kSubsetSum}) {
    if (token == ToString(c)) return c;
  }
  return std::nullopt;
}

void ValidateGenSpec(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
  if (spec.min_weight < 1 || spec.min_weight > spec.max_weight) {
    throw std::invalid_argument("weight range needs 1 <= min <= max");
  }
  if (IsUniformKind(spec.kind)) {
    if (spec.bound < 1) throw std::invalid_argument("bound must be >= 1");
  } else if (spec.m < 1) {
    throw std::invalid_argument("m must be >= 1");
  }
}

std::vector<Item> GenItems(const GenSpec& spec, SplitMix64& rng) {
  ValidateGenSpec(spec);
  const bool valued = !IsUniformKind(spec.kind);
  const Weight d = (spec.max_weight - spec.min_weight) / 10;
  std::vector<Item> items;
  items.reserve(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    Item it{i, rng.Uniform(spec.min_weight, spec.max_weight), 0};
    if (valued) {
      switch (spec.cls) {
        case CorrelationClass::kUncorrelated:
          it.value = rng.Uniform(spec.min_weight, spec.max_weight);
          break;
        case CorrelationClass::kWeaklyCorrelated:
          it.value = std::max<Value>(1, rng.Uniform(it.weight - d, it.weight + d));
          break;
        case CorrelationClass::kStronglyCorrelated:
          it.value = it.weight + d;
          break;
        case CorrelationClass::kSubsetSum:
          it.value = it.weight;
          break;
      }
    }
    items.push_back(it);
  }
  return items;
}

std::vector<Item> GenItems(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  return GenItems(spec, rng);
}

std::vector<Weight> GenMkpCapacities(const GenSpec& spec,
                                     std::span<const Item> items,
                                     SplitMix64& rng) {
  if (spec.m < 1) throw std::invalid_argument("m must be >= 1");
  const Weight total = WeightSum(items);
  const Weight m = spec.m;
  const Weight lo = (4 * total) / (10 * m);
  const Weight hi = (6 * total) / (10 * m);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    std::vector<Weight> caps;
    Weight used = 0;
    for (int i = 0; i + 1 < spec.m; ++i) {
      caps.push_back(rng.Uniform(lo, hi));
      used += caps.back();
    }
    const Weight last = total / 2 - used;
    const bool ok = last >= 1 && std::all_of(caps.begin(), caps.end(),
                                             [](Weight c) { return c >= 1; });
    if (ok) {
      caps.push_back(last);
      return caps;
    }
  }
  throw std::runtime_error("no valid capacity draw within the retry budget");
}

Instance GenerateInstance(const GenSpec& spec) {
  ValidateGenSpec(spec);
  SplitMix64 rng(spec.seed);
  if (IsUniformKind(spec.kind)) {
    return Instance(spec.kind, {spec.bound}, GenItems(spec, rng));
  }
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    std::vector<Item> items = GenItems(spec, rng);
    std::vector<Weight> caps;
    try {
      caps = GenMkpCapacities(spec, items, rng);
    } catch (const std::runtime_error&) {
      continue;
    }
    Instance inst(spec.kind, std::move(caps), std::move(items));
    if (spec.kind == ProblemKind::kMccp || !IsDegenerateMkp(inst)) return inst;
  }
  throw std::runtime_error("no usable instance within the retry budget");
}

bool IsDegenerateMkp(const Instance& inst) {
  const std::vector<Weight>& caps = inst.containers();
  const Weight max_cap = *std::max_element(caps.begin(), caps.end());
  const Weight min_cap = *std::min_element(caps.begin(), caps.end());
  if (inst.items().empty()) return true;
  Weight min_w = inst.items().front().weight;
  for (const Item& it : inst.items()) {
    if (it.weight > max_cap) return true;
    min_w = std::min(min_w, it.weight);
  }
  return min_cap < min_w || inst.total_weight() < max_cap;
}

bool IsTrivialCovering(const Instance& inst) {
  if (inst.kind() != ProblemKind::kBinCovering) {
    throw std::invalid_argument("expected a bin covering instance");
  }
  const Weight q = inst.uniform_bound();
  return CoveringGreedyLower(inst.items(), q).objective ==
         CoveringUpperBound(inst.items(), q);
}

Instance ReadInstance(std::istream& in, Metadata* meta) {
  std::optional<ProblemKind> kind;
  std::vector<Weight> containers;
  bool have_containers = false;
  std::optional<std::int64_t> count;
  std::vector<Item> items;
  int lineno = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::vector<std::string> t = Tokens(StripComment(raw, meta));
    if (t.empty()) continue;
    if (!kind) {
      if (t[0] != "kind") throw ParseError(lineno, "kind", "expected 'kind'");
      if (t.size() != 2) throw ParseError(lineno, "kind", "expected one token");
      kind = ParseProblemKind(t[1]);
      if (!kind) {
        throw ParseError(lineno, "kind", "unknown kind '" + t[1] + "'");
      }
    } else if (!have_containers) {
      if (t[0] != "containers") {
        throw ParseError(lineno, "containers", "expected 'containers'");
      }
      for (std::size_t i = 1; i < t.size(); ++i) {
        const std::int64_t v = IntField(t[i], lineno, "containers");
        if (v < 1) throw ParseError(lineno, "containers", "values must be >= 1");
        containers.push_back(v);
      }
      if (containers.empty()) {
        throw ParseError(lineno, "containers", "no values");
      }
      if (IsUniformKind(*kind) && containers.size() != 1) {
        throw ParseError(lineno, "containers",
                         std::string(ToString(*kind)) + " takes one value");
      }
      have_containers = true;
    } else if (!count) {
      if (t[0] != "items") throw ParseError(lineno, "items", "expected 'items'");
      if (t.size() != 2) throw ParseError(lineno, "items", "expected a count");
      count = IntField(t[1], lineno, "items");
      if (*count < 0) throw ParseError(lineno, "items", "negative count");
    } else {
      const std::string field = "item " + std::to_string(items.size());
      if (static_cast<std::int64_t>(items.size()) == *count) {
        throw ParseError(lineno, field, "more item lines than declared");
      }
      const bool valued = !IsUniformKind(*kind);
      if (t.size() > 2 || (valued && t.size() != 2)) {
        throw ParseError(lineno, field,
                         valued ? "expected '<weight> <value>'"
                                : "expected '<weight>'");
      }
      Item it{static_cast<ItemId>(items.size()),
              IntField(t[0], lineno, field + " weight"), 0};
      if (it.weight < 1) {
        throw ParseError(lineno, field + " weight", "must be >= 1");
      }
      if (t.size() == 2) it.value = IntField(t[1], lineno, field + " value");
      if (it.value < 0 || (!valued && it.value != 0)) {
        throw ParseError(lineno, field + " value",
                         valued ? "must be >= 0" : "must be 0 for this kind");
      }
      items.push_back(it);
    }
  }
  if (!kind) throw ParseError(lineno, "kind", "missing kind line");
  if (!have_containers) {
    throw ParseError(lineno, "containers", "missing containers line");
  }
  if (!count) throw ParseError(lineno, "items", "missing items line");
  if (static_cast<std::int64_t>(items.size()) != *count) {
    throw ParseError(lineno, "items",
                     "declared " + std::to_string(*count) + " items, found " +
                         std::to_string(items.size()));
  }
  return Instance(*kind, std::move(containers), std::move(items));
}

Instance ReadInstanceFile(const std::string& path, Metadata* meta) {
  std::ifstream in = OpenForRead(path);
  return ReadInstance(in, meta);
}

void WriteInstance(const Instance& inst, std::ostream& out,
                   const Metadata& meta) {
  for (const auto& [key, value] : meta) out << "# @" << key << ' ' << value << '\n';
  out << "kind " << ToString(inst.kind()) << '\n';
  out << "containers";
  for (Weight c : inst.containers()) out << ' ' << c;
  out << '\n';
  out << "items " << inst.num_items() << '\n';
  const bool valued = !IsUniformKind(inst.kind());
  for (const Item& it : inst.items()) {
    out << it.weight;
    if (valued) out << ' ' << it.value;
    out << '\n';
  }
}

void WriteInstanceFile(const Instance& inst, const std::string& path,
                       const Metadata& meta) {
  std::ofstream out = OpenForWrite(path);
  WriteInstance(inst, out, meta);
  if (!out) throw std::runtime_error("write failed for " + path);
}

SolutionFile ReadSolution(std::istream& in) {
  SolutionFile file;
  int lineno = 0;
  std::string raw;
  auto ids = [&](const std::vector<std::string>& t, std::size_t from,
                 const std::string& field) {
    std::vector<ItemId> out;
    for (std::size_t i = from; i < t.size(); ++i) {
      out.push_back(static_cast<ItemId>(IntField(t[i], lineno, field)));
    }
    return out;
  };
  bool have_bins = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> t = Tokens(StripComment(raw, nullptr));
    if (t.empty()) continue;
    if (t[0] == "objective") {
      if (t.size() != 2) throw ParseError(lineno, "objective", "expected a value");
      file.objective = IntField(t[1], lineno, "objective");
    } else if (t[0] == "bins") {
      if (have_bins) throw ParseError(lineno, "bins", "repeated");
      if (t.size() != 2) throw ParseError(lineno, "bins", "expected a count");
      const std::int64_t k = IntField(t[1], lineno, "bins");
      if (k < 0) throw ParseError(lineno, "bins", "negative count");
      have_bins = true;
      // Bin lines are taken verbatim so that an empty line is an empty bin.
      for (std::int64_t b = 0; b < k; ++b) {
        if (!std::getline(in, raw)) {
          throw ParseError(lineno, "bin " + std::to_string(b), "missing line");
        }
        ++lineno;
        file.bins.push_back(ids(Tokens(raw), 0, "bin " + std::to_string(b)));
      }
    } else if (t[0] == "overflow") {
      file.overflow = ids(t, 1, "overflow");
    } else {
      throw ParseError(lineno, t[0], "unexpected token");
    }
  }
  if (!have_bins) throw ParseError(lineno, "bins", "missing bins line");
  return file;
}

SolutionFile ReadSolutionFile(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadSolution(in);
}

void WriteSolution(const Solution& sol, std::ostream& out) {
  out << "objective " << sol.objective << '\n';
  out << "bins " << sol.bins.size() << '\n';
  for (const BinAssignment& a : sol.bins) {
    const std::vector<ItemId> ids = a.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      out << (i ? " " : "") << ids[i];
    }
    out << '\n';
  }
  if (!sol.overflow.empty()) {
    out << "overflow";
    for (ItemId id : sol.overflow.ids()) out << ' ' << id;
    out << '\n';
  }
}

void WriteSolutionFile(const Solution& sol, const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WriteSolution(sol, out);
  if (!out) throw std::runtime_error("write failed for " + path);
}

ValidationVerdict ValidateSolutionFile(const Instance& inst,
                                       const SolutionFile& file) {
  ValidationVerdict verdict;
  const int n = inst.num_items();
  std::vector<int> uses(n, 0);
  auto scan = [&](const std::vector<ItemId>& ids, const std::string& where) {
    for (ItemId id : ids) {
      if (id < 0 || id >= n) {
        verdict.violations.push_back(
            {ViolationCode::kUnknownItem,
             "item " + std::to_string(id) + " in " + where});
      } else {
        ++uses[id];
      }
    }
  };
  for (std::size_t b = 0; b < file.bins.size(); ++b) {
    scan(file.bins[b], "bin " + std::to_string(b));
  }
  scan(file.overflow, "overflow");
  for (int id = 0; id < n; ++id) {
    if (uses[id] > 1) {
      verdict.violations.push_back(
          {ViolationCode::kDuplicateItem,
           "item " + std::to_string(id) + " used " + std::to_string(uses[id]) +
               " times"});
    }
  }
  if (!verdict.ok()) return verdict;

  auto assignment = [&](const std::vector<ItemId>& ids) {
    std::vector<Item> items;
    for (ItemId id : ids) items.push_back(inst.items()[id]);
    return BinAssignment(std::move(items));
  };
  Solution sol;
  for (const std::vector<ItemId>& b : file.bins) sol.bins.push_back(assignment(b));
  sol.overflow = assignment(file.overflow);
  sol.objective = file.objective.value_or(0);
  verdict = ValidateSolution(inst, sol);
  if (!file.objective) {
    std::erase_if(verdict.violations, [](const Violation& v) {
      return v.code == ViolationCode::kObjectiveMismatch;
    });
  }
  return verdict;
}

}  // namespace bincomp
