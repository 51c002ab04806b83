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

#include "rsvp/distances.h"

#include <stdexcept>

#include "gtest/gtest.h"
#include "rsvp/generators.h"
#include "rsvp/random.h"
#include "test_util.h"

namespace rsvp {
namespace {

std::vector<int> Hops(const std::vector<Distance>& row) {
  std::vector<int> out;
  for (Distance d : row) out.push_back(d.reachable() ? d.hops() : -1);
  return out;
}

TEST(BfsDistancesTest, CycleRing) {
  EXPECT_EQ(Hops(BfsDistances(Cycle(6), 0)), (std::vector<int>{0, 1, 2, 3, 2, 1}));
}

TEST(BfsDistancesTest, OtherComponentUnreachable) {
  const Graph g = DisjointUnion(Complete(3), Complete(3));
  const auto row = BfsDistances(g, 0);
  EXPECT_EQ(Hops(row), (std::vector<int>{0, 1, 1, -1, -1, -1}));
  EXPECT_EQ(row[4], Distance::Unreachable());
  EXPECT_FALSE(row[4].value().has_value());
}

TEST(BfsDistancesTest, Fig2FromV1) {
  EXPECT_EQ(Hops(BfsDistances(Fig2Fixture(), 0)),
            (std::vector<int>{0, 1, 2, 3, 2, 1}));
}

TEST(BfsDistancesTest, SourceOutOfRange) {
  EXPECT_THROW(BfsDistances(Cycle(4), 4), std::out_of_range);
  EXPECT_THROW(BfsDistances(Cycle(4), -1), std::out_of_range);
}

TEST(DistanceMatrixTest, EmptyGraph) {
  const DistanceMatrix d = ComputeDistanceMatrix(Graph::FromEdges(3, {}));
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex w = 0; w < 3; ++w) {
      EXPECT_EQ(d(u, w), u == w ? Distance::Finite(0) : Distance::Unreachable());
    }
  }
}

TEST(DistanceMatrixTest, CompleteGraph) {
  const DistanceMatrix d = ComputeDistanceMatrix(Complete(4));
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex w = 0; w < 4; ++w) {
      EXPECT_EQ(d(u, w), Distance::Finite(u == w ? 0 : 1));
    }
  }
}

TEST(DistanceMatrixTest, Fig2Entries) {
  const DistanceMatrix d = ComputeDistanceMatrix(Fig2Fixture());
  EXPECT_EQ(d(1, 4), Distance::Finite(3));  // v2, v5
  EXPECT_EQ(d(1, 5), Distance::Finite(2));  // v2, v6
  EXPECT_EQ(d(3, 5), Distance::Finite(2));  // v4, v6
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex w = 0; w < 6; ++w) EXPECT_EQ(d(u, w), d(w, u));
  }
}

TEST(DistanceMatrixTest, AgreesWithFloydWarshall) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 30);
    const DistanceMatrix d = ComputeDistanceMatrix(g);
    const auto reference = testing::FloydWarshall(g);
    const int n = g.num_vertices();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w) {
        const Distance e = d(u, w);
        ASSERT_EQ(e.reachable() ? e.hops() : -1, reference[u][w]);
        ASSERT_EQ(e, d(w, u));
        ASSERT_EQ(e == Distance::Finite(1), g.HasEdge(u, w) && u != w);
        if (!e.reachable()) continue;
        for (Vertex x = 0; x < n; ++x) {
          if (d(u, x).reachable() && d(x, w).reachable()) {
            ASSERT_LE(e.hops(), d(u, x).hops() + d(x, w).hops());
          }
        }
      }
    }
  }
}

TEST(DistanceMatrixTest, PermutationEquivariant) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 24);
    const Permutation p = Permutation::Random(g.num_vertices(), rng.Next());
    const DistanceMatrix d = ComputeDistanceMatrix(g);
    const DistanceMatrix dp = ComputeDistanceMatrix(Permute(g, p));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex w = 0; w < g.num_vertices(); ++w) {
        ASSERT_EQ(dp(p[u], p[w]), d(u, w));
      }
    }
  }
}

}  // namespace
}  // namespace rsvp
