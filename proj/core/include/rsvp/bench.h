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

#ifndef RSVP_BENCH_H_
#define RSVP_BENCH_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsvp/graph.h"
#include "rsvp/oracle.h"

namespace rsvp {

enum class ExpectedLabel { kIso, kNonIso, kUnknown };

struct ManifestRow {
  std::string name;
  // `gen:<generator spec>` or a file path (relative paths resolve against
  // the manifest's directory).
  std::string graph_a;
  std::string graph_b;
  ExpectedLabel expected = ExpectedLabel::kUnknown;
};

struct Manifest {
  std::string base_dir;
  std::vector<ManifestRow> rows;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV with header `name,graph_a,graph_b,expected`; `#` starts a comment line.
// Commas inside double quotes or parentheses do not split fields, so
// `gen:disjoint_union(complete(3),complete(3))` needs no quoting. The expected
// column may be empty or missing ("unknown"). Throws ManifestError.
Manifest ParseManifest(std::string_view text, std::string base_dir);

// Reads a manifest file, or returns the builtin manifest for the name
// "tables-builtin". Throws ManifestError when the file cannot be read.
Manifest LoadManifest(const std::string& path);

// Generatable rows: WL-failure pairs and permuted isomorphic families.
Manifest BuiltinManifest();

// Resolves a manifest graph reference. Throws on any failure.
Graph LoadGraphSource(const std::string& source, const std::string& base_dir);

struct ReportRow {
  std::string name;
  ExpectedLabel expected = ExpectedLabel::kUnknown;
  std::string error;  // non-empty when the row could not be evaluated
  int n = 0;
  int64_t m = 0;
  bool wl_non_iso = false;
  bool rsvp_non_iso = false;
  std::optional<bool> oracle_iso;  // unset when skipped by the size gate
  double wl_ms = 0;
  double rsvp_ms = 0;
  std::optional<double> oracle_ms;

  // Ground truth used for the agreement flags: the expected label, or the
  // oracle verdict when the label is unknown.
  std::optional<bool> ReferenceIso() const;
  std::optional<bool> WlCorrect() const;
  std::optional<bool> RsvpCorrect() const;
};

struct BenchOptions {
  int jobs = 1;
  int oracle_max_vertices = kOracleMaxVertices;
};

// One report row per manifest row, in manifest order. Row failures are
// recorded in ReportRow::error and never abort the run.
std::vector<ReportRow> RunManifest(const Manifest& manifest,
                                   const BenchOptions& options);

std::string FormatTable(const std::vector<ReportRow>& rows);
std::string FormatCsv(const std::vector<ReportRow>& rows);
std::string FormatSummary(const std::vector<ReportRow>& rows);

std::string ToString(ExpectedLabel label);

}  // namespace rsvp

#endif  // RSVP_BENCH_H_
