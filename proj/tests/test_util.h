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

#ifndef RSVP_TESTS_TEST_UTIL_H_
#define RSVP_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rsvp/generators.h"
#include "rsvp/graph.h"
#include "rsvp/random.h"

namespace rsvp::testing {

// Random graph on at most max_n vertices drawn from a mix of families,
// including disconnected ones, relabeled at random.
inline Graph RandomMixedGraph(Rng& rng, int max_n) {
  const int n = 1 + static_cast<int>(rng.Below(static_cast<uint64_t>(max_n)));
  const int64_t max_m = static_cast<int64_t>(n) * (n - 1) / 2;
  Graph g;
  switch (rng.Below(7)) {
    case 0:  // sparse
      g = RandomGnm(n, std::min<int64_t>(max_m, rng.Below(2 * n + 1)), rng.Next());
      break;
    case 1:  // any density
      g = RandomGnm(n, static_cast<int64_t>(rng.Below(max_m + 1)), rng.Next());
      break;
    case 2: {  // regular
      const int d = static_cast<int>(rng.Below(std::min(n, 6)));
      g = (n * d) % 2 == 0 ? RandomRegular(n, d, rng.Next())
                           : RandomGnm(n, n / 2, rng.Next());
      break;
    }
    case 3: {  // disconnected union of two random pieces
      const int a = std::max(1, n / 2);
      const int b = std::max(1, n - a);
      g = DisjointUnion(RandomGnm(a, rng.Below(a * (a - 1) / 2 + 1), rng.Next()),
                        RandomGnm(b, rng.Below(b * (b - 1) / 2 + 1), rng.Next()));
      break;
    }
    case 4:
      g = n >= 3 ? DisjointUnion(Cycle(n), PathGraph(1 + n / 3)) : PathGraph(n);
      break;
    case 5: {
      const int rows = 1 + static_cast<int>(rng.Below(4));
      g = Grid(rows, std::max(1, n / rows));
      break;
    }
    default: {
      static const int kPaley[] = {5, 13, 17};
      const int q = kPaley[rng.Below(3)];
      g = q <= max_n ? Paley(q) : Complete(std::min(n, 7));
      break;
    }
  }
  return Permute(g, Permutation::Random(g.num_vertices(), rng.Next()));
}

// Reference all-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> FloydWarshall(const Graph& g) {
  const int n = g.num_vertices();
  constexpr int kInf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, w] : g.Edges()) d[u][w] = d[w][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  return d;
}

}  // namespace rsvp::testing

#endif  // RSVP_TESTS_TEST_UTIL_H_
