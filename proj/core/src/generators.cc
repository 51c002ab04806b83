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

#include "rsvp/generators.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rsvp/random.h"

namespace rsvp {
namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

bool IsPrime(int64_t q) {
  if (q < 2) return false;
  for (int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GeneratorSpec ParseAll() {
    GeneratorSpec spec = ParseSpec();
    SkipSpace();
    Require(pos_ == text_.size(),
            "trailing characters in generator spec '" + std::string(text_) + "'");
    return spec;
  }

 private:
  GeneratorSpec ParseSpec() {
    SkipSpace();
    GeneratorSpec spec;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      spec.family.push_back(text_[pos_++]);
    }
    Require(!spec.family.empty(),
            "expected generator name in '" + std::string(text_) + "'");
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      SkipSpace();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return spec;
      }
      while (true) {
        spec.args.push_back(ParseArg());
        SkipSpace();
        Require(pos_ < text_.size(), "unterminated argument list");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        Require(text_[pos_] == ')', "expected ',' or ')'");
        ++pos_;
        break;
      }
    } else {
      // Colon form: family:1:2
      while (pos_ < text_.size() && text_[pos_] == ':') {
        ++pos_;
        spec.args.push_back(ParseArg());
      }
    }
    return spec;
  }

  GeneratorSpec::Arg ParseArg() {
    SkipSpace();
    Require(pos_ < text_.size(), "missing argument");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      int64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      Require(ec == std::errc(), "bad integer argument");
      pos_ = static_cast<size_t>(ptr - text_.data());
      return value;
    }
    return ParseSpec();
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

int64_t IntArg(const GeneratorSpec& spec, size_t i) {
  const auto* value = std::get_if<int64_t>(&spec.args[i]);
  Require(value != nullptr, spec.family + ": argument " + std::to_string(i + 1) +
                                " must be an integer");
  return *value;
}

const GeneratorSpec& GraphArg(const GeneratorSpec& spec, size_t i) {
  const auto* value = std::get_if<GeneratorSpec>(&spec.args[i]);
  Require(value != nullptr, spec.family + ": argument " + std::to_string(i + 1) +
                                " must be a generator spec");
  return *value;
}

void RequireArity(const GeneratorSpec& spec, size_t arity) {
  Require(spec.args.size() == arity,
          spec.family + " takes " + std::to_string(arity) + " argument(s), got " +
              std::to_string(spec.args.size()));
}

int CheckedSize(int64_t value, const std::string& what) {
  Require(value >= 0 && value <= 1'000'000, what + " out of range");
  return static_cast<int>(value);
}

}  // namespace

Graph Cycle(int k) {
  Require(k >= 3, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::FromEdges(k, edges);
}

Graph Complete(int k) {
  Require(k >= 0, "complete needs k >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(k, edges);
}

Graph PathGraph(int k) {
  Require(k >= 1, "path needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(k, edges);
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.Edges();
  const int offset = a.num_vertices();
  for (const auto& [u, w] : b.Edges()) edges.emplace_back(u + offset, w + offset);
  return Graph::FromEdges(a.num_vertices() + b.num_vertices(), edges);
}

Graph Rook(int k) {
  Require(k >= 1, "rook needs k >= 1");
  std::vector<Edge> edges;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      for (int c2 = c + 1; c2 < k; ++c2) edges.emplace_back(r * k + c, r * k + c2);
      for (int r2 = r + 1; r2 < k; ++r2) edges.emplace_back(r * k + c, r2 * k + c);
    }
  }
  return Graph::FromEdges(k * k, edges);
}

Graph Grid(int rows, int cols) {
  Require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) edges.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  }
  return Graph::FromEdges(rows * cols, edges);
}

Graph Shrikhande() {
  constexpr int kSteps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<Edge> edges;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (const auto& step : kSteps) {
        // The negated step is covered from the other endpoint.
        const int nx = (x + step[0]) % 4;
        const int ny = (y + step[1]) % 4;
        edges.emplace_back(x * 4 + y, nx * 4 + ny);
      }
    }
  }
  return Graph::FromEdges(16, edges);
}

Graph Paley(int q) {
  Require(IsPrime(q) && q % 4 == 1,
          "paley needs a prime q with q = 1 mod 4, got " + std::to_string(q));
  std::vector<bool> square(q, false);
  for (int64_t x = 1; x < q; ++x) square[(x * x) % q] = true;
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (square[j - i]) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(q, edges);
}

Graph RandomGnm(int n, int64_t m, uint64_t seed) {
  Require(n >= 0, "random_gnm needs n >= 0");
  const int64_t max_edges = static_cast<int64_t>(n) * (n - 1) / 2;
  Require(m >= 0 && m <= max_edges,
          "random_gnm: m must lie in [0, " + std::to_string(max_edges) + "]");
  // Floyd's sampling of m distinct pair indices.
  Rng rng(seed);
  std::set<int64_t> chosen;
  for (int64_t j = max_edges - m; j < max_edges; ++j) {
    const auto t = static_cast<int64_t>(rng.Below(static_cast<uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  // Index t enumerates pairs (u, w), u < w, row by row.
  int64_t row_start = 0;
  Vertex u = 0;
  for (int64_t t : chosen) {
    while (t >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.emplace_back(u, static_cast<Vertex>(u + 1 + (t - row_start)));
  }
  return Graph::FromEdges(n, edges);
}

Graph RandomRegular(int n, int d, uint64_t seed) {
  Require(n >= 0 && d >= 0 && (d < n || (n == 0 && d == 0)),
          "random_regular needs 0 <= d < n");
  Require((static_cast<int64_t>(n) * d) % 2 == 0,
          "random_regular needs n * d even");
  Rng rng(seed);
  std::vector<Vertex> points;
  points.reserve(static_cast<size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.Shuffle(points);
    std::set<Edge> seen;
    std::vector<Edge> edges;
    bool simple = true;
    for (size_t i = 0; i + 1 < points.size(); i += 2) {
      const Vertex a = std::min(points[i], points[i + 1]);
      const Vertex b = std::max(points[i], points[i + 1]);
      if (a == b || !seen.insert({a, b}).second) {
        simple = false;
        break;
      }
      edges.emplace_back(a, b);
    }
    if (simple) return Graph::FromEdges(n, edges);
  }
  throw std::runtime_error("random_regular: no simple pairing found");
}

Graph Fig2Fixture() {
  const Edge edges[] = {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}};
  return Graph::FromEdges(6, edges);
}

GeneratorSpec ParseGeneratorSpec(std::string_view text) {
  return SpecParser(text).ParseAll();
}

std::string ToString(const GeneratorSpec& spec) {
  std::string out = spec.family;
  if (spec.args.empty()) return out;
  out.push_back('(');
  for (size_t i = 0; i < spec.args.size(); ++i) {
    if (i > 0) out.push_back(',');
    if (const auto* v = std::get_if<int64_t>(&spec.args[i])) {
      out += std::to_string(*v);
    } else {
      out += ToString(std::get<GeneratorSpec>(spec.args[i]));
    }
  }
  out.push_back(')');
  return out;
}

Graph Generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "cycle") {
    RequireArity(spec, 1);
    return Cycle(CheckedSize(IntArg(spec, 0), "k"));
  }
  if (f == "complete") {
    RequireArity(spec, 1);
    return Complete(CheckedSize(IntArg(spec, 0), "k"));
  }
  if (f == "path") {
    RequireArity(spec, 1);
    return PathGraph(CheckedSize(IntArg(spec, 0), "k"));
  }
  if (f == "disjoint_union") {
    RequireArity(spec, 2);
    return DisjointUnion(Generate(GraphArg(spec, 0)), Generate(GraphArg(spec, 1)));
  }
  if (f == "rook") {
    RequireArity(spec, 1);
    return Rook(CheckedSize(IntArg(spec, 0), "k"));
  }
  if (f == "grid") {
    RequireArity(spec, 2);
    return Grid(CheckedSize(IntArg(spec, 0), "rows"),
                CheckedSize(IntArg(spec, 1), "cols"));
  }
  if (f == "shrikhande") {
    RequireArity(spec, 0);
    return Shrikhande();
  }
  if (f == "paley") {
    RequireArity(spec, 1);
    return Paley(CheckedSize(IntArg(spec, 0), "q"));
  }
  if (f == "random_gnm") {
    RequireArity(spec, 3);
    return RandomGnm(CheckedSize(IntArg(spec, 0), "n"), IntArg(spec, 1),
                     static_cast<uint64_t>(IntArg(spec, 2)));
  }
  if (f == "random_regular") {
    RequireArity(spec, 3);
    return RandomRegular(CheckedSize(IntArg(spec, 0), "n"),
                         CheckedSize(IntArg(spec, 1), "d"),
                         static_cast<uint64_t>(IntArg(spec, 2)));
  }
  if (f == "fig2_fixture") {
    RequireArity(spec, 0);
    return Fig2Fixture();
  }
  if (f == "permute") {
    RequireArity(spec, 2);
    const Graph g = Generate(GraphArg(spec, 0));
    return Permute(g, Permutation::Random(g.num_vertices(),
                                          static_cast<uint64_t>(IntArg(spec, 1))));
  }
  throw std::invalid_argument("unknown generator family '" + f + "'");
}

Graph Generate(std::string_view spec_text) {
  return Generate(ParseGeneratorSpec(spec_text));
}

std::vector<std::string> GeneratorFamilies() {
  return {"cycle(k)",          "complete(k)",
          "path(k)",           "disjoint_union(G,H)",
          "rook(k)",           "grid(rows,cols)",
          "shrikhande",        "paley(q)",
          "random_gnm(n,m,seed)", "random_regular(n,d,seed)",
          "fig2_fixture",      "permute(G,seed)"};
}

}  // namespace rsvp
