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
#include <string>

namespace rsvp {

std::vector<Distance> BfsDistances(const Graph& g, Vertex source) {
  const int n = g.num_vertices();
  if (source < 0 || source >= n) {
    throw std::out_of_range("source vertex " + std::to_string(source) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  std::vector<Distance> dist(n, Distance::Unreachable());
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = Distance::Finite(0);
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int32_t next = dist[u].hops() + 1;
    for (Vertex w : g.Neighbors(u)) {
      if (!dist[w].reachable()) {
        dist[w] = Distance::Finite(next);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix ComputeDistanceMatrix(const Graph& g) {
  DistanceMatrix d;
  d.n_ = g.num_vertices();
  d.entries_.reserve(static_cast<size_t>(d.n_) * d.n_);
  for (Vertex s = 0; s < d.n_; ++s) {
    const auto row = BfsDistances(g, s);
    d.entries_.insert(d.entries_.end(), row.begin(), row.end());
  }
  return d;
}

}  // namespace rsvp
