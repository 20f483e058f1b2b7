//
// Copyright 2026 The Lara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line front end: load and print tables, evaluate plans, run the
// reference algorithms, and recompute the worked examples.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lara/algebra/registry.h"
#include "lara/algorithms/lu.h"
#include "lara/algorithms/mcl.h"
#include "lara/algorithms/pagerank.h"
#include "lara/figures/figures.h"
#include "lara/plan/plan.h"
#include "lara/plan/plan_format.h"
#include "lara/table/delimited.h"
#include "lara/table/error.h"

namespace fs = std::filesystem;

namespace lara {
namespace {

constexpr int kOk = 0;
constexpr int kDiagnostic = 1;
constexpr int kUsage = 2;

// Bad invocations that CLI11 cannot see, such as an empty plan file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IoOptions {
  std::string delimiter;
  std::string schema;
  std::string out;
};

char ParseDelimiter(const std::string& text) {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1) {
    throw UsageError("--delimiter takes one character or 'tab', got '" + text +
                     "'");
  }
  return text[0];
}

char InputDelimiter(const IoOptions& io, const std::string& path) {
  return io.delimiter.empty() ? DelimiterForPath(path) : ParseDelimiter(io.delimiter);
}

char OutputDelimiter(const IoOptions& io, const std::string& path) {
  if (!io.delimiter.empty()) return ParseDelimiter(io.delimiter);
  return path.empty() ? ',' : DelimiterForPath(path);
}

// The sidecar next to a data file: same stem, extension ".schema".
std::string SidecarPath(const std::string& data_path) {
  return fs::path(data_path).replace_extension(".schema").string();
}

// Collision operators named in the sidecar, bound to each attribute default.
DelimitedOptions ReadOptions(const Sidecar& sidecar, char delimiter) {
  DelimitedOptions options;
  options.delimiter = delimiter;
  for (const auto& [attr, op_name] : sidecar.collision_ops) {
    BinaryOp op = OpRegistry::Builtins().Get(op_name);
    if (op.bind_default) {
      op = op.bind_default(sidecar.schema.Value(attr).default_value);
    }
    options.collision[attr] = op.apply;
  }
  return options;
}

// Explicit sidecar, else the one beside the file, else `fallback`.
Table LoadTable(const std::string& path, const IoOptions& io,
                const std::optional<TableSchema>& fallback = std::nullopt) {
  Sidecar sidecar;
  if (!io.schema.empty()) {
    sidecar = ReadSidecarFile(io.schema);
  } else if (fs::exists(SidecarPath(path))) {
    sidecar = ReadSidecarFile(SidecarPath(path));
  } else if (fallback) {
    sidecar.schema = *fallback;
  } else {
    throw UsageError("no schema for " + path + ": pass --schema or create " +
                     SidecarPath(path));
  }
  try {
    return ReadDelimitedFile(path, sidecar.schema,
                             ReadOptions(sidecar, InputDelimiter(io, path)));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

void Emit(const Table& t, const IoOptions& io, const std::string& path) {
  if (path.empty()) {
    WriteDelimited(t, std::cout, OutputDelimiter(io, path));
  } else {
    WriteDelimitedFile(t, path, OutputDelimiter(io, path));
  }
}

// "out/lu.csv" -> "out/lu.lower.csv".
std::string WithPart(const std::string& path, const std::string& part) {
  fs::path p(path);
  fs::path name = p.stem();
  name += "." + part;
  name += p.extension();
  return (p.parent_path() / name).string();
}

bool IsBlankPlan(const std::string& text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      return false;
    }
  }
  return true;
}

TableSchema MatrixSchema(const std::string& row, const std::string& col,
                         const std::string& value) {
  return TableSchema({{row, ScalarKind::kInt}, {col, ScalarKind::kInt}},
                     {{value, ScalarKind::kReal, Scalar(0.0)}});
}

int RunLoad(const std::string& path, const IoOptions& io) {
  Emit(LoadTable(path, io), io, io.out);
  return kOk;
}

int RunEval(const std::string& plan_path, const std::vector<std::string>& bindings,
            const IoOptions& io) {
  std::ifstream in(plan_path);
  if (!in) throw UsageError("cannot open plan file " + plan_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (IsBlankPlan(text)) throw UsageError("plan file " + plan_path + " is empty");

  SchemaEnv schemas;
  TableEnv tables;
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size()) {
      throw UsageError("table binding '" + b + "' is not NAME=FILE");
    }
    std::string name = b.substr(0, eq);
    Table t = LoadTable(b.substr(eq + 1), {io.delimiter, "", ""});
    schemas.emplace(name, t.schema());
    tables.emplace(name, std::move(t));
  }
  Plan plan = [&] {
    try {
      return ParsePlan(text, schemas);
    } catch (const ParseError& e) {
      throw ParseError(plan_path + ":" + e.what());
    }
  }();
  Emit(Evaluate(plan, tables), io, io.out);
  return kOk;
}

int RunPageRank(const std::string& first, const std::string& second,
                const PageRankParams& params, const IoOptions& io) {
  TableSchema edges = MatrixSchema("src", "dst", "val");
  PageRankResult r =
      JointPageRank(LoadTable(first, io, edges), LoadTable(second, io, edges), params);
  Emit(r.rank, io, io.out);
  return kOk;
}

int RunMcl(const std::string& path, const MclParams& params, const IoOptions& io) {
  MclResult r = Mcl(LoadTable(path, io, MatrixSchema("row", "col", "value")), params);
  for (size_t i = 0; i < r.chaos.size(); ++i) {
    std::cerr << "iteration " << i + 1 << ": chaos " << Scalar(r.chaos[i]) << "\n";
  }
  if (!r.converged) {
    std::cerr << "lara mcl: warning: stopped after " << params.max_iterations
              << " iterations without converging\n";
  }
  Emit(r.matrix, io, io.out);
  return kOk;
}

int RunLu(const std::string& path, const IoOptions& io) {
  LuResult r = LuDecompose(LoadTable(path, io, MatrixSchema("r", "c", "v")));
  if (io.out.empty()) {
    std::cout << "# lower\n";
    Emit(r.lower, io, "");
    std::cout << "# upper\n";
    Emit(r.upper, io, "");
  } else {
    Emit(r.lower, io, WithPart(io.out, "lower"));
    Emit(r.upper, io, WithPart(io.out, "upper"));
  }
  return kOk;
}

int RunFigures(const std::string& selector) {
  std::vector<FigurePanel> panels;
  try {
    panels = ReproduceFigures(selector);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& panel : panels) {
    std::cout << "figure " << panel.id << ": " << panel.caption << "\n";
    for (const auto& check : panel.checks) {
      std::cout << "-- " << check.name << "\n" << FormatTable(check.actual);
      if (check.Matches()) {
        std::cout << "ok\n";
      } else {
        all = false;
        std::cout << "MISMATCH: "
                  << DescribeDifference(check.actual, check.expected,
                                        check.tolerance)
                  << "\nexpected:\n" << FormatTable(check.expected);
      }
    }
    std::cout << "\n";
  }
  return all ? kOk : kDiagnostic;
}

int Main(int argc, char** argv) {
  CLI::App app{"Associative table algebra: load tables, evaluate plans, run "
               "the reference algorithms."};
  app.require_subcommand(1);
  IoOptions io;
  auto add_io = [&io](CLI::App* cmd, bool schema) {
    cmd->add_option("--delimiter", io.delimiter,
                    "Field delimiter: one character or 'tab' (default from "
                    "the file extension: tab for .tsv, else comma)");
    if (schema) {
      cmd->add_option("--schema", io.schema,
                      "Schema sidecar (default: FILE with extension .schema)");
    }
    cmd->add_option("--out", io.out, "Write the result here instead of stdout");
  };

  std::string file, second;
  std::vector<std::string> bindings;

  CLI::App* load = app.add_subcommand("load", "Read a delimited table and print "
                                              "it in canonical form");
  load->add_option("file", file, "Delimited data file")->required();
  add_io(load, true);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a plan over named tables");
  eval->add_option("plan", file, "Plan file (S-expression)")->required();
  eval->add_option("tables", bindings,
                   "NAME=FILE bindings; each FILE needs a sidecar beside it");
  add_io(eval, false);

  PageRankParams pr;
  CLI::App* pagerank = app.add_subcommand(
      "pagerank", "Joint PageRank over the sources common to two networks");
  pagerank->add_option("first", file, "Edges (src, dst; val) of network 1")
      ->required();
  pagerank->add_option("second", second, "Edges of network 2")->required();
  pagerank->add_option("--c", pr.c, "Probability of following an edge")->capture_default_str();
  pagerank->add_option("--iters", pr.iterations, "Iterations")->capture_default_str();
  pagerank->add_option("--seed", pr.seed, "Seed for the random start")->capture_default_str();
  add_io(pagerank, true);

  MclParams mp;
  CLI::App* mcl = app.add_subcommand("mcl", "Markov clustering");
  mcl->add_option("file", file, "Matrix (row, col; value)")->required();
  mcl->add_option("--prunelimit", mp.prune_limit, "Prune entries at or below")->capture_default_str();
  mcl->add_option("--epsilon", mp.epsilon, "Stop once chaos drops by no more")->capture_default_str();
  add_io(mcl, true);

  CLI::App* lu = app.add_subcommand(
      "lu", "LU decomposition without pivoting; --out PATH writes "
            "PATH's stem .lower and .upper files");
  lu->add_option("file", file, "Square matrix (r, c; v)")->required();
  add_io(lu, true);

  CLI::App* figures = app.add_subcommand(
      "reproduce-figure", "Recompute worked examples and compare with the "
                          "expected tables");
  figures->add_option("id", file, "'all', a figure number, or a panel id such "
                                  "as 13f")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*load) return RunLoad(file, io);
    if (*eval) return RunEval(file, bindings, io);
    if (*pagerank) return RunPageRank(file, second, pr, io);
    if (*mcl) return RunMcl(file, mp, io);
    if (*lu) return RunLu(file, io);
    if (*figures) return RunFigures(file);
  } catch (const UsageError& e) {
    std::cerr << "lara: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "lara: error: " << e.what() << "\n";
    return kDiagnostic;
  }
  return kUsage;
}

}  // namespace
}  // namespace lara

int main(int argc, char** argv) { return lara::Main(argc, argv); }
