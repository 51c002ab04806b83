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

#include "rsvp/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include "rsvp/color_refinement.h"
#include "rsvp/generators.h"
#include "rsvp/graph_io.h"
#include "rsvp/signature.h"

namespace rsvp {
namespace {

constexpr std::string_view kBuiltinName = "tables-builtin";
constexpr std::string_view kGenPrefix = "gen:";

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  int depth = 0;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',' && depth == 0) {
      fields.emplace_back();
    } else {
      if (c == '(') ++depth;
      if (c == ')' && depth > 0) --depth;
      fields.back().push_back(c);
    }
  }
  for (auto& f : fields) f = Trim(f);
  return fields;
}

ExpectedLabel ParseLabel(const std::string& text, int line) {
  if (text.empty() || text == "unknown") return ExpectedLabel::kUnknown;
  if (text == "iso") return ExpectedLabel::kIso;
  if (text == "non-iso") return ExpectedLabel::kNonIso;
  throw ManifestError("manifest line " + std::to_string(line) +
                      ": expected label must be iso, non-iso or unknown");
}

double MillisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

ReportRow EvaluateRow(const ManifestRow& row, const std::string& base_dir,
                      const BenchOptions& options) {
  ReportRow report;
  report.name = row.name;
  report.expected = row.expected;
  try {
    const Graph a = LoadGraphSource(row.graph_a, base_dir);
    const Graph b = LoadGraphSource(row.graph_b, base_dir);
    report.n = a.num_vertices();
    report.m = a.num_edges();

    auto start = std::chrono::steady_clock::now();
    report.wl_non_iso = WlCompare(a, b) == WlVerdict::kNonIsomorphic;
    report.wl_ms = MillisecondsSince(start);

    start = std::chrono::steady_clock::now();
    report.rsvp_non_iso = !RsvpCompare(a, b).certificates_equal();
    report.rsvp_ms = MillisecondsSince(start);

    if (std::max(a.num_vertices(), b.num_vertices()) <=
        options.oracle_max_vertices) {
      start = std::chrono::steady_clock::now();
      report.oracle_iso = FindIsomorphism(a, b).has_value();
      report.oracle_ms = MillisecondsSince(start);
    }
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

std::string Mark(std::optional<bool> flag) {
  if (!flag) return "-";
  return *flag ? "yes" : "no";
}

std::string FormatMs(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

std::string NonIsoWord(bool non_iso, bool rsvp) {
  if (non_iso) return "non-iso";
  return rsvp ? "cert-equal" : "possibly-iso";
}

std::string OracleWord(const std::optional<bool>& iso) {
  if (!iso) return "skipped";
  return *iso ? "iso" : "non-iso";
}

// Cells for one row, shared by the table and CSV writers.
std::vector<std::string> Cells(const ReportRow& r) {
  if (!r.error.empty()) {
    return {r.name, "-", "-", ToString(r.expected), "error", "error", "error",
            "-",    "-", "-", "-",                  "-",     r.error};
  }
  return {r.name,
          std::to_string(r.n),
          std::to_string(r.m),
          ToString(r.expected),
          NonIsoWord(r.wl_non_iso, false),
          NonIsoWord(r.rsvp_non_iso, true),
          OracleWord(r.oracle_iso),
          Mark(r.WlCorrect()),
          Mark(r.RsvpCorrect()),
          FormatMs(r.wl_ms),
          FormatMs(r.rsvp_ms),
          r.oracle_ms ? FormatMs(*r.oracle_ms) : "-",
          ""};
}

const std::vector<std::string>& Header() {
  static const std::vector<std::string> header = {
      "name",  "n",       "m",     "expected", "wl",        "rsvp",     "oracle",
      "wl_ok", "rsvp_ok", "wl_ms", "rsvp_ms",  "oracle_ms", "error"};
  return header;
}

std::string CsvEscape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string ToString(ExpectedLabel label) {
  switch (label) {
    case ExpectedLabel::kIso:
      return "iso";
    case ExpectedLabel::kNonIso:
      return "non-iso";
    case ExpectedLabel::kUnknown:
      break;
  }
  return "unknown";
}

Manifest ParseManifest(std::string_view text, std::string base_dir) {
  Manifest manifest;
  manifest.base_dir = std::move(base_dir);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  bool saw_header = false;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto fields = SplitCsvLine(trimmed);
    if (!saw_header) {
      if (fields.size() < 3 || fields[0] != "name" || fields[1] != "graph_a" ||
          fields[2] != "graph_b" || (fields.size() > 3 && fields[3] != "expected")) {
        throw ManifestError("manifest header must be name,graph_a,graph_b,expected");
      }
      saw_header = true;
      continue;
    }
    if (fields.size() < 3 || fields.size() > 4) {
      throw ManifestError("manifest line " + std::to_string(line_number) +
                          ": expected 3 or 4 fields");
    }
    ManifestRow row;
    row.name = fields[0];
    row.graph_a = fields[1];
    row.graph_b = fields[2];
    row.expected = fields.size() == 4 ? ParseLabel(fields[3], line_number)
                                      : ExpectedLabel::kUnknown;
    if (row.name.empty() || !names.insert(row.name).second) {
      throw ManifestError("manifest line " + std::to_string(line_number) +
                          ": case name missing or duplicated");
    }
    manifest.rows.push_back(std::move(row));
  }
  return manifest;
}

Manifest LoadManifest(const std::string& path) {
  if (path == kBuiltinName) return BuiltinManifest();
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ManifestError("cannot open manifest '" + path + "'");
  std::string text(std::istreambuf_iterator<char>(file), {});
  return ParseManifest(text,
                       std::filesystem::path(path).parent_path().string());
}

Manifest BuiltinManifest() {
  static constexpr std::string_view kRows = R"(name,graph_a,graph_b,expected
disconnected_property,gen:cycle(6),gen:disjoint_union(complete(3),complete(3)),non-iso
strongly_regular_property,gen:shrikhande,gen:rook(4),non-iso
random_3_regular_pair,gen:random_regular(20,3,1),gen:random_regular(20,3,2),unknown
k_complete_8,gen:complete(8),gen:permute(complete(8),11),iso
k_complete_16,gen:complete(16),gen:permute(complete(16),12),iso
grid_rook_5,gen:rook(5),gen:permute(rook(5),13),iso
grid_lattice_6x7,gen:grid(6,7),gen:permute(grid(6,7),14),iso
paley_13,gen:paley(13),gen:permute(paley(13),15),iso
paley_17,gen:paley(17),gen:permute(paley(17),16),iso
paley_29,gen:paley(29),gen:permute(paley(29),17),iso
)";
  return ParseManifest(kRows, "");
}

Graph LoadGraphSource(const std::string& source, const std::string& base_dir) {
  if (source.starts_with(kGenPrefix)) {
    return Generate(std::string_view(source).substr(kGenPrefix.size()));
  }
  std::filesystem::path path(source);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  std::istringstream no_stdin;
  return ReadGraph(path.string(), GraphFormat::kAuto, no_stdin).graph;
}

std::optional<bool> ReportRow::ReferenceIso() const {
  if (!error.empty()) return std::nullopt;
  if (expected == ExpectedLabel::kIso) return true;
  if (expected == ExpectedLabel::kNonIso) return false;
  return oracle_iso;
}

std::optional<bool> ReportRow::WlCorrect() const {
  const auto reference = ReferenceIso();
  if (!reference) return std::nullopt;
  return *reference != wl_non_iso;
}

std::optional<bool> ReportRow::RsvpCorrect() const {
  const auto reference = ReferenceIso();
  if (!reference) return std::nullopt;
  return *reference != rsvp_non_iso;
}

std::vector<ReportRow> RunManifest(const Manifest& manifest,
                                   const BenchOptions& options) {
  std::vector<ReportRow> rows(manifest.rows.size());
  const int jobs = std::clamp(options.jobs, 1,
                              std::max(1, static_cast<int>(rows.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < rows.size(); i = next++) {
      rows[i] = EvaluateRow(manifest.rows[i], manifest.base_dir, options);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  return rows;
}

std::string FormatSummary(const std::vector<ReportRow>& rows) {
  int errors = 0, wl_detected = 0, rsvp_detected = 0;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      ++errors;
      continue;
    }
    wl_detected += r.wl_non_iso;
    rsvp_detected += r.rsvp_non_iso;
  }
  std::ostringstream out;
  out << "summary: cases=" << rows.size() << " errors=" << errors
      << " non-iso detected: wl=" << wl_detected << " rsvp=" << rsvp_detected
      << " (wl = 1-WL color refinement)\n";
  return out.str();
}

std::string FormatTable(const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> cells = {Header()};
  for (const auto& r : rows) cells.push_back(Cells(r));
  std::vector<size_t> width(Header().size(), 0);
  for (const auto& line : cells) {
    for (size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    std::string text;
    for (size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text += "  ";
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
    }
    out << Trim(text) << '\n';
  }
  out << FormatSummary(rows);
  return out.str();
}

std::string FormatCsv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  auto write = [&out](const std::vector<std::string>& line) {
    for (size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out << ',';
      out << CsvEscape(line[i]);
    }
    out << '\n';
  };
  write(Header());
  for (const auto& r : rows) write(Cells(r));
  out << "# " << FormatSummary(rows);
  return out.str();
}

}  // namespace rsvp
