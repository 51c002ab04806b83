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

#include "rsvp/reachability.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rsvp {
namespace {

constexpr int32_t kUnseen = -1;

void CheckVertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(g.num_vertices()) + ")");
  }
}

// BFS distances from s in G - {removed}; kUnseen marks unreachable vertices
// and the removed vertex. `dist` and `queue` are scratch buffers.
void DeletedBfs(const Graph& g, Vertex removed, Vertex s,
                std::vector<int32_t>& dist, std::vector<Vertex>& queue) {
  dist.assign(g.num_vertices(), kUnseen);
  queue.clear();
  dist[s] = 0;
  queue.push_back(s);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.Neighbors(u)) {
      if (w != removed && dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

// Calls emit(target, hop, parent) for every entry of the traversal. Only
// vertices reached by the BFS can have a reached neighbor, so iterating the
// queue covers every emitting target.
template <typename Emit>
void ForEachEntry(const Graph& g, Vertex removed,
                  const std::vector<int32_t>& dist,
                  const std::vector<Vertex>& reached, Emit&& emit) {
  for (Vertex t : reached) {
    for (Vertex u : g.Neighbors(t)) {
      if (u != removed && dist[u] != kUnseen) emit(t, dist[u] + 1, u);
    }
  }
}

}  // namespace

std::vector<TraversalEntry> DeletedNeighborhoodBfs(const Graph& g, Vertex v,
                                                   Vertex s) {
  CheckVertex(g, v);
  CheckVertex(g, s);
  if (s == v || !g.HasEdge(v, s)) {
    throw std::invalid_argument("start vertex " + std::to_string(s) +
                                " is not a neighbor of " + std::to_string(v));
  }
  std::vector<int32_t> dist;
  std::vector<Vertex> queue;
  DeletedBfs(g, v, s, dist, queue);
  std::vector<TraversalEntry> entries;
  ForEachEntry(g, v, dist, queue, [&](Vertex t, int32_t hop, Vertex parent) {
    entries.push_back({t, hop, parent});
  });
  std::sort(entries.begin(), entries.end());
  return entries;
}

HopParentIndex AggregateHopParents(const Graph& g, Vertex v) {
  CheckVertex(g, v);
  struct Observation {
    Vertex target;
    int32_t hop;
    Vertex parent;
    Vertex start;
    auto operator<=>(const Observation&) const = default;
  };
  std::vector<Observation> observations;
  std::vector<int32_t> dist;
  std::vector<Vertex> queue;
  for (Vertex s : g.Neighbors(v)) {
    DeletedBfs(g, v, s, dist, queue);
    ForEachEntry(g, v, dist, queue, [&](Vertex t, int32_t hop, Vertex parent) {
      observations.push_back({t, hop + 1, parent, s});
    });
  }
  std::sort(observations.begin(), observations.end());

  std::vector<std::vector<HopGroup>> groups(g.num_vertices());
  std::vector<Vertex> starts;
  for (size_t i = 0; i < observations.size();) {
    const Vertex t = observations[i].target;
    const int32_t hop = observations[i].hop;
    HopGroup group{hop, 0, {}};
    starts.clear();
    for (; i < observations.size() && observations[i].target == t &&
           observations[i].hop == hop;
         ++i) {
      if (group.parents.empty() || group.parents.back() != observations[i].parent) {
        group.parents.push_back(observations[i].parent);
      }
      starts.push_back(observations[i].start);
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
#if RSVP_PARENT_COUNT_MULTIPLICITY
    group.count = static_cast<int32_t>(group.parents.size());
#else
    group.count = static_cast<int32_t>(starts.size());
#endif
    groups[t].push_back(std::move(group));
  }
  return HopParentIndex(v, std::move(groups));
}

}  // namespace rsvp
