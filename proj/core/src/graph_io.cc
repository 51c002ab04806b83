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

#include "rsvp/graph_io.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace rsvp {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(start, end - start));
    pos = end;
  }
  return fields;
}

// Iterates over lines, tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool Next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = Trim(text_.substr(pos_, end - pos_));
    pos_ = end + 1;
    ++line_number_;
    return true;
  }

  int line_number() const { return line_number_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_number_ = 0;
};

int64_t ParseInt(std::string_view field, int line, const char* what) {
  int64_t value = 0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(field) + "'");
  }
  return value;
}

// Shared edge bookkeeping for both formats.
class EdgeCollector {
 public:
  void Add(int64_t u, int64_t w, int line, std::vector<std::string>& warnings) {
    if (u == w) {
      throw ParseError(line, "self-loop on vertex " + std::to_string(u));
    }
    const Edge key{static_cast<Vertex>(std::min(u, w)),
                   static_cast<Vertex>(std::max(u, w))};
    if (!seen_.insert(key).second) {
      warnings.push_back("line " + std::to_string(line) +
                         ": duplicate edge ignored");
      return;
    }
    edges_.push_back(key);
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

ParsedGraph ParseDimacs(std::string_view text) {
  ParsedGraph result;
  LineReader reader(text);
  std::string_view line;
  int64_t n = -1;
  int64_t declared_m = 0;
  EdgeCollector edges;
  bool warned_colors = false;
  while (reader.Next(line)) {
    const int ln = reader.line_number();
    if (line.empty() || line[0] == 'c') continue;
    const auto fields = SplitFields(line);
    if (fields[0] == "p") {
      if (n >= 0) throw ParseError(ln, "second problem line");
      if (fields.size() != 4 || fields[1] != "edge") {
        throw ParseError(ln, "expected 'p edge <n> <m>'");
      }
      n = ParseInt(fields[2], ln, "vertex count");
      declared_m = ParseInt(fields[3], ln, "edge count");
      if (n < 0 || declared_m < 0) {
        throw ParseError(ln, "negative count in problem line");
      }
    } else if (fields[0] == "e") {
      if (n < 0) throw ParseError(ln, "edge line before problem line");
      if (fields.size() != 3) throw ParseError(ln, "expected 'e <u> <v>'");
      const int64_t u = ParseInt(fields[1], ln, "vertex id");
      const int64_t w = ParseInt(fields[2], ln, "vertex id");
      if (u < 1 || u > n || w < 1 || w > n) {
        throw ParseError(ln, "vertex id outside 1.." + std::to_string(n));
      }
      edges.Add(u - 1, w - 1, ln, result.warnings);
    } else if (fields[0] == "n") {
      if (!warned_colors) {
        result.warnings.push_back("line " + std::to_string(ln) +
                                  ": vertex color lines ignored");
        warned_colors = true;
      }
    } else {
      throw ParseError(ln, "unrecognized line '" + std::string(line) + "'");
    }
  }
  if (n < 0) throw ParseError(0, "missing 'p edge' problem line");
  const auto actual_m = static_cast<int64_t>(edges.edges().size());
  if (actual_m != declared_m) {
    result.warnings.push_back("problem line declares " +
                              std::to_string(declared_m) + " edges, found " +
                              std::to_string(actual_m));
  }
  result.graph = Graph::FromEdges(static_cast<int>(n), edges.edges());
  return result;
}

ParsedGraph ParseEdgeList(std::string_view text) {
  ParsedGraph result;
  LineReader reader(text);
  std::string_view line;
  int64_t n = -1;
  EdgeCollector edges;
  while (reader.Next(line)) {
    const int ln = reader.line_number();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = SplitFields(line);
    if (n < 0) {
      if (fields.size() != 1) throw ParseError(ln, "expected vertex count");
      n = ParseInt(fields[0], ln, "vertex count");
      if (n < 0) throw ParseError(ln, "negative vertex count");
      continue;
    }
    if (fields.size() != 2) throw ParseError(ln, "expected '<u> <v>'");
    const int64_t u = ParseInt(fields[0], ln, "vertex id");
    const int64_t w = ParseInt(fields[1], ln, "vertex id");
    if (u < 0 || u >= n || w < 0 || w >= n) {
      throw ParseError(ln, "vertex id outside 0.." + std::to_string(n - 1));
    }
    edges.Add(u, w, ln, result.warnings);
  }
  if (n < 0) throw ParseError(0, "missing vertex count");
  result.graph = Graph::FromEdges(static_cast<int>(n), edges.edges());
  return result;
}

ParsedGraph ParseGraph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kEdgeList;
    LineReader reader(text);
    std::string_view line;
    while (reader.Next(line)) {
      if (line.size() >= 2 && line[0] == 'p' && (line[1] == ' ' || line[1] == '\t')) {
        format = GraphFormat::kDimacs;
        break;
      }
    }
  }
  return format == GraphFormat::kDimacs ? ParseDimacs(text) : ParseEdgeList(text);
}

std::string ToDimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, w] : g.Edges()) {
    out << "e " << u + 1 << ' ' << w + 1 << '\n';
  }
  return out.str();
}

std::string ToEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << '\n';
  for (const auto& [u, w] : g.Edges()) out << u << ' ' << w << '\n';
  return out.str();
}

ParsedGraph ReadGraph(const std::string& path, GraphFormat format,
                      std::istream& stdin_stream) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return ParseGraph(text, format);
}

GraphFormat ParseFormatName(std::string_view name) {
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "auto") return GraphFormat::kAuto;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

}  // namespace rsvp
