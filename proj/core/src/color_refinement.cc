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

#include "rsvp/color_refinement.h"

#include <algorithm>
#include <numeric>

#include "rsvp/generators.h"

namespace rsvp {

std::vector<int> RefineOnce(const Graph& g, std::span<const int> colors) {
  const int n = g.num_vertices();
  // keys[v] = [color(v), sorted neighbor colors...]
  std::vector<std::vector<int>> keys(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& key = keys[v];
    key.reserve(g.Degree(v) + 1);
    for (Vertex w : g.Neighbors(v)) key.push_back(colors[w]);
    std::sort(key.begin(), key.end());
    key.insert(key.begin(), colors[v]);
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&keys](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  std::vector<int> refined(n);
  int next = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++next;
    refined[order[i]] = next;
  }
  return refined;
}

Coloring ColorRefinement(const Graph& g) {
  Coloring c;
  const int n = g.num_vertices();
  c.colors.assign(n, 0);
  c.num_colors = n > 0 ? 1 : 0;
  while (true) {
    std::vector<int> refined = RefineOnce(g, c.colors);
    const int count =
        n > 0 ? *std::max_element(refined.begin(), refined.end()) + 1 : 0;
    if (count == c.num_colors) break;
    c.colors = std::move(refined);
    c.num_colors = count;
    ++c.rounds;
  }
  return c;
}

std::vector<int> ColorHistogram(std::span<const int> colors, int num_colors,
                                Vertex begin, Vertex end) {
  std::vector<int> histogram(num_colors, 0);
  for (Vertex v = begin; v < end; ++v) ++histogram[colors[v]];
  return histogram;
}

WlVerdict WlCompare(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices() != g2.num_vertices()) return WlVerdict::kNonIsomorphic;
  const Coloring c = ColorRefinement(DisjointUnion(g1, g2));
  const int n1 = g1.num_vertices();
  const int total = n1 + g2.num_vertices();
  return ColorHistogram(c.colors, c.num_colors, 0, n1) ==
                 ColorHistogram(c.colors, c.num_colors, n1, total)
             ? WlVerdict::kPossiblyIsomorphic
             : WlVerdict::kNonIsomorphic;
}

}  // namespace rsvp
