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

#ifndef RSVP_GRAPH_IO_H_
#define RSVP_GRAPH_IO_H_

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsvp/graph.h"

namespace rsvp {

// Raised for malformed graph text. line() is 1-based; 0 means the problem is
// not tied to one line (for example a missing problem line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedGraph {
  Graph graph;
  // Non-fatal issues: duplicate edges, edge-count mismatch, ignored lines.
  std::vector<std::string> warnings;
};

enum class GraphFormat { kAuto, kDimacs, kEdgeList };

// DIMACS: `c` comments, one `p edge <n> <m>` line, then `e <u> <v>` with
// 1-based ids. `n` (vertex color) lines are ignored with a warning.
ParsedGraph ParseDimacs(std::string_view text);

// Edge list: `#` comments, first data line `<n>`, then `<u> <v>` 0-based.
ParsedGraph ParseEdgeList(std::string_view text);

// kAuto picks DIMACS when any line starts with `p `, else the edge list.
ParsedGraph ParseGraph(std::string_view text, GraphFormat format);

std::string ToDimacs(const Graph& g);
std::string ToEdgeList(const Graph& g);

// Reads a graph from `path`, or from `stdin_stream` when path is "-".
// Throws std::runtime_error when the file cannot be opened.
ParsedGraph ReadGraph(const std::string& path, GraphFormat format,
                      std::istream& stdin_stream);

// "dimacs" | "edgelist" | "auto". Throws std::invalid_argument otherwise.
GraphFormat ParseFormatName(std::string_view name);

}  // namespace rsvp

#endif  // RSVP_GRAPH_IO_H_
