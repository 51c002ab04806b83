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

#include "rsvp/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rsvp/random.h"

namespace rsvp {

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, w] : edges) {
    if (u < 0 || u >= n || w < 0 || w >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(w) +
                                  ") has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (u == w) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(w);
    g.adjacency_[w].push_back(u);
  }
  int64_t degree_sum = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += static_cast<int64_t>(list.size());
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

bool Graph::HasEdge(Vertex u, Vertex w) const {
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[w];
  // Lists may be shuffled, so a linear scan of the shorter one.
  const auto& list = a.size() <= b.size() ? a : b;
  const Vertex other = a.size() <= b.size() ? w : u;
  return std::find(list.begin(), list.end(), other) != list.end();
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex w : adjacency_[u]) {
      if (u < w) edges.emplace_back(u, w);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Graph Graph::WithShuffledAdjacency(uint64_t seed) const {
  Graph g = *this;
  Rng rng(seed);
  for (auto& list : g.adjacency_) rng.Shuffle(list);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() &&
         a.num_edges() == b.num_edges() && a.Edges() == b.Edges();
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v < 0 || static_cast<size_t>(v) >= image_.size() || seen[v]) {
      throw std::invalid_argument("mapping is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::Random(int n, uint64_t seed) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  Rng rng(seed);
  rng.Shuffle(image);
  return Permutation(std::move(image));
}

Permutation Permutation::Inverse() const {
  std::vector<Vertex> inverse(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) {
    inverse[image_[i]] = static_cast<Vertex>(i);
  }
  return Permutation(std::move(inverse));
}

Graph Permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices()) {
    throw std::invalid_argument("permutation size " + std::to_string(p.size()) +
                                " does not match vertex count " +
                                std::to_string(g.num_vertices()));
  }
  std::vector<Edge> edges = g.Edges();
  for (auto& [u, w] : edges) {
    u = p[u];
    w = p[w];
  }
  return Graph::FromEdges(g.num_vertices(), edges);
}

std::vector<int> DegreeSequence(const Graph& g) {
  std::vector<int> degrees(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) degrees[v] = g.Degree(v);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace rsvp
