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

#include "rsvp/oracle.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rsvp/color_refinement.h"
#include "rsvp/generators.h"
#include "rsvp/random.h"
#include "rsvp/signature.h"

namespace rsvp {
namespace {

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g)
      : n_(g.num_vertices()), bits_(static_cast<size_t>(n_) * n_, 0) {
    for (const auto& [u, w] : g.Edges()) {
      bits_[Index(u, w)] = 1;
      bits_[Index(w, u)] = 1;
    }
  }
  bool operator()(Vertex u, Vertex w) const { return bits_[Index(u, w)] != 0; }

 private:
  size_t Index(Vertex u, Vertex w) const {
    return static_cast<size_t>(u) * n_ + w;
  }
  int n_;
  std::vector<uint8_t> bits_;
};

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, std::vector<int> colors1,
          std::vector<int> colors2)
      : g1_(g1),
        adj1_(g1),
        adj2_(g2),
        colors1_(std::move(colors1)),
        colors2_(std::move(colors2)),
        image_(g1.num_vertices(), -1),
        used_(g2.num_vertices(), false) {
    BuildOrder();
  }

  std::optional<std::vector<Vertex>> Run() {
    if (Extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Connectivity-first order: prefer vertices with the most already-ordered
  // neighbors, then smaller color classes, then smaller ids.
  void BuildOrder() {
    const int n = g1_.num_vertices();
    std::map<int, int> class_size;
    for (int c : colors1_) ++class_size[c];
    std::vector<int> links(n, 0);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_size[colors1_[v]] < class_size[colors1_[best]])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : g1_.Neighbors(best)) ++links[w];
    }
  }

  bool Consistent(int depth, Vertex u, Vertex w) const {
    for (int i = 0; i < depth; ++i) {
      const Vertex prev = order_[i];
      if (adj1_(u, prev) != adj2_(w, image_[prev])) return false;
    }
    return true;
  }

  bool Extend(int depth) {
    if (depth == static_cast<int>(order_.size())) return true;
    const Vertex u = order_[depth];
    for (Vertex w = 0; w < static_cast<Vertex>(used_.size()); ++w) {
      if (used_[w] || colors2_[w] != colors1_[u] || !Consistent(depth, u, w)) {
        continue;
      }
      image_[u] = w;
      used_[w] = true;
      if (Extend(depth + 1)) return true;
      used_[w] = false;
      image_[u] = -1;
    }
    return false;
  }

  const Graph& g1_;
  AdjacencyMatrix adj1_;
  AdjacencyMatrix adj2_;
  std::vector<int> colors1_;
  std::vector<int> colors2_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

// Isomorphism-invariant bucket key for corpus deduplication.
std::vector<int> InvariantKey(const Graph& g) {
  std::vector<int> key = DegreeSequence(g);
  const Coloring c = ColorRefinement(g);
  const auto histogram =
      ColorHistogram(c.colors, c.num_colors, 0, g.num_vertices());
  key.push_back(-1);
  key.insert(key.end(), histogram.begin(), histogram.end());
  return key;
}

class ClassCollector {
 public:
  void Offer(Graph g) {
    auto& bucket = buckets_[InvariantKey(g)];
    for (size_t index : bucket) {
      if (FindIsomorphism(graphs_[index], g)) return;
    }
    bucket.push_back(graphs_.size());
    graphs_.push_back(std::move(g));
  }
  std::vector<Graph> Take() { return std::move(graphs_); }

 private:
  std::map<std::vector<int>, std::vector<size_t>> buckets_;
  std::vector<Graph> graphs_;
};

}  // namespace

std::optional<Permutation> FindIsomorphism(const Graph& g1, const Graph& g2) {
  const int n = g1.num_vertices();
  if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
    return std::nullopt;
  }
  const Coloring joint = ColorRefinement(DisjointUnion(g1, g2));
  if (ColorHistogram(joint.colors, joint.num_colors, 0, n) !=
      ColorHistogram(joint.colors, joint.num_colors, n, 2 * n)) {
    return std::nullopt;
  }
  std::vector<int> colors1(joint.colors.begin(), joint.colors.begin() + n);
  std::vector<int> colors2(joint.colors.begin() + n, joint.colors.end());
  Matcher matcher(g1, g2, std::move(colors1), std::move(colors2));
  auto image = matcher.Run();
  if (!image) return std::nullopt;
  Permutation f(std::move(*image));
  if (!VerifyMapping(g1, g2, f)) {
    throw std::logic_error("isomorphism search produced an invalid mapping");
  }
  return f;
}

std::vector<Graph> ExhaustiveCorpus(int n, uint64_t seed, int sample_count) {
  if (n < 0) throw std::invalid_argument("corpus size must be >= 0");
  if (n <= 7) {
    // Grow classes one vertex at a time: every graph on k vertices is some
    // graph on k - 1 vertices plus a new vertex with some neighborhood.
    std::vector<Graph> classes = {Graph::FromEdges(0, {})};
    for (int k = 1; k <= n; ++k) {
      ClassCollector collector;
      for (const Graph& base : classes) {
        const std::vector<Edge> base_edges = base.Edges();
        for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
          std::vector<Edge> edges = base_edges;
          for (int u = 0; u < k - 1; ++u) {
            if (mask & (1u << u)) edges.emplace_back(u, k - 1);
          }
          collector.Offer(Graph::FromEdges(k, edges));
        }
      }
      classes = collector.Take();
    }
    return classes;
  }
  Rng rng(seed);
  const int64_t max_edges = static_cast<int64_t>(n) * (n - 1) / 2;
  ClassCollector collector;
  for (int i = 0; i < sample_count; ++i) {
    const auto m = static_cast<int64_t>(rng.Below(max_edges + 1));
    collector.Offer(RandomGnm(n, m, rng.Next()));
  }
  return collector.Take();
}

}  // namespace rsvp
