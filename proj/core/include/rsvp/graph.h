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

#ifndef RSVP_GRAPH_H_
#define RSVP_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rsvp {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph over dense vertex ids 0..n-1.
//
// Instances are immutable once built. Adjacency lists are sorted ascending
// unless the graph was produced by WithShuffledAdjacency(), which exists so
// tests can check that no algorithm depends on neighbor order.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either orientation)
  // are collapsed. Throws std::invalid_argument on a self-loop or an endpoint
  // outside [0, n).
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int64_t num_edges() const { return num_edges_; }

  std::span<const Vertex> Neighbors(Vertex v) const { return adjacency_[v]; }
  int Degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool HasEdge(Vertex u, Vertex w) const;

  // Edges with u < w, sorted.
  std::vector<Edge> Edges() const;

  // Same edge set; each adjacency list is randomly reordered.
  Graph WithShuffledAdjacency(uint64_t seed) const;

  // Compares edge sets, ignoring adjacency storage order.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int64_t num_edges_ = 0;
};

// A bijection on 0..n-1: image[i] is where vertex i goes.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument if `image` is not a bijection.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation Identity(int n);
  static Permutation Random(int n, uint64_t seed);

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator[](Vertex v) const { return image_[v]; }
  std::span<const Vertex> image() const { return image_; }

  Permutation Inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

// Relabels every vertex v of `g` as p[v]. Throws std::invalid_argument when
// p.size() != g.num_vertices().
Graph Permute(const Graph& g, const Permutation& p);

// Sorted degree sequence.
std::vector<int> DegreeSequence(const Graph& g);

}  // namespace rsvp

#endif  // RSVP_GRAPH_H_
