// Copyright 2026 The RSVP Authors
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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rsvp/bench.h"
#include "rsvp/color_refinement.h"
#include "rsvp/generators.h"
#include "rsvp/graph_io.h"
#include "rsvp/oracle.h"
#include "rsvp/signature.h"

namespace rsvp::cli {
namespace {

struct Options {
  std::string format = "auto";

  std::string certify_input = "-";

  std::string compare_a;
  std::string compare_b;
  std::string method = "rsvp";
  bool verify = false;
  bool force = false;

  std::string gen_family;
  std::vector<std::string> gen_params;
  std::string gen_output;
  std::string gen_format = "dimacs";

  std::string manifest;
  bool csv = false;
  int jobs = 1;
};

Graph Load(const std::string& path, const std::string& format, std::istream& in,
           std::ostream& err) {
  ParsedGraph parsed = ReadGraph(path, ParseFormatName(format), in);
  for (const auto& warning : parsed.warnings) {
    err << "warning: " << path << ": " << warning << '\n';
  }
  return std::move(parsed.graph);
}

std::string MappingText(const Permutation& f) {
  std::ostringstream out;
  out << "mapping:";
  for (Vertex v : f.image()) out << ' ' << v;
  return out.str();
}

int Certify(const Options& o, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const Graph g = Load(o.certify_input, o.format, in, err);
  out << ComputeCertificate(g).Serialize();
  return kExitIsomorphic;
}

int Compare(const Options& o, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const Graph a = Load(o.compare_a, o.format, in, err);
  const Graph b = Load(o.compare_b, o.format, in, err);
  if (o.method == "wl") {
    if (WlCompare(a, b) == WlVerdict::kNonIsomorphic) {
      out << "non-isomorphic\n";
      return kExitNonIsomorphic;
    }
    out << "possibly isomorphic (WL inconclusive)\n";
    return kExitIsomorphic;
  }
  if (o.method == "oracle") {
    const int n = std::max(a.num_vertices(), b.num_vertices());
    if (n > kOracleMaxVertices && !o.force) {
      err << "error: oracle limited to " << kOracleMaxVertices
          << " vertices (graph has " << n << "); pass --force to run anyway\n";
      return kExitError;
    }
    const auto f = FindIsomorphism(a, b);
    if (!f) {
      out << "non-isomorphic\n";
      return kExitNonIsomorphic;
    }
    out << "isomorphic\n";
    if (o.verify) out << MappingText(*f) << '\n';
    return kExitIsomorphic;
  }
  const RsvpVerdict verdict = RsvpCompare(a, b);
  if (!verdict.certificates_equal()) {
    out << "non-isomorphic\n";
    return kExitNonIsomorphic;
  }
  out << "certificates equal";
  if (o.verify) {
    const bool ok = VerifyMapping(a, b, *verdict.mapping);
    out << (ok ? " (verified)" : " (unverified candidate)") << '\n'
        << MappingText(*verdict.mapping);
  }
  out << '\n';
  return kExitIsomorphic;
}

int Gen(const Options& o, std::ostream& out) {
  std::string spec = o.gen_family;
  if (!o.gen_params.empty()) {
    spec += '(';
    for (size_t i = 0; i < o.gen_params.size(); ++i) {
      if (i > 0) spec += ',';
      spec += o.gen_params[i];
    }
    spec += ')';
  }
  const Graph g = Generate(spec);
  const std::string text =
      ParseFormatName(o.gen_format) == GraphFormat::kEdgeList ? ToEdgeList(g)
                                                              : ToDimacs(g);
  if (o.gen_output.empty() || o.gen_output == "-") {
    out << text;
    return kExitIsomorphic;
  }
  std::ofstream file(o.gen_output, std::ios::binary);
  file << text;
  if (!file) throw std::runtime_error("cannot write '" + o.gen_output + "'");
  return kExitIsomorphic;
}

int Bench(const Options& o, std::ostream& out) {
  const Manifest manifest = LoadManifest(o.manifest);
  BenchOptions options;
  options.jobs = o.jobs;
  const auto rows = RunManifest(manifest, options);
  out << (o.csv ? FormatCsv(rows) : FormatTable(rows));
  return kExitIsomorphic;
}

std::string FamilyHelp() {
  std::string text = "Families:";
  for (const auto& f : GeneratorFamilies()) text += " " + f;
  return text;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph isomorphism testing with prime-encoded reachability "
               "signatures and a 1-WL baseline",
               "rsvp"};
  app.require_subcommand(1);

  auto* certify = app.add_subcommand("certify", "Print a graph's certificate");
  certify->add_option("file", o.certify_input, "Graph file, or - for stdin");
  certify->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));

  auto* compare = app.add_subcommand(
      "compare", "Compare two graphs (exit 0 = equal, 1 = non-isomorphic)");
  compare->add_option("a", o.compare_a, "First graph file")->required();
  compare->add_option("b", o.compare_b, "Second graph file")->required();
  compare->add_option("--method", o.method, "Test to run")
      ->check(CLI::IsMember({"rsvp", "wl", "oracle"}));
  compare->add_flag("--verify", o.verify,
                    "Check the candidate mapping edge by edge and print it");
  compare->add_flag("--force", o.force, "Run the oracle above its size limit");
  compare->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->footer(FamilyHelp());
  gen->add_option("family", o.gen_family, "Generator family or full spec")
      ->required();
  gen->add_option("params", o.gen_params, "Integer or nested-spec parameters");
  gen->add_option("-o,--output", o.gen_output, "Output path (default stdout)");
  gen->add_option("--format", o.gen_format, "Output format")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));

  auto* bench = app.add_subcommand(
      "bench", "Run a benchmark manifest (or 'tables-builtin')");
  bench->add_option("manifest", o.manifest, "Manifest CSV path")->required();
  bench->add_flag("--csv", o.csv, "Emit CSV instead of a text table");
  bench->add_option("--jobs", o.jobs, "Rows evaluated in parallel")
      ->check(CLI::Range(1, 256));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*certify) return Certify(o, in, out, err);
    if (*compare) return Compare(o, in, out, err);
    if (*gen) return Gen(o, out);
    if (*bench) return Bench(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace rsvp::cli
