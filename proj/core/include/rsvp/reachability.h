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

#ifndef RSVP_REACHABILITY_H_
#define RSVP_REACHABILITY_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rsvp/graph.h"

namespace rsvp {

// One hop-parent observation from a traversal of G - {v}: `target` is
// reachable in `hop` steps from the traversal start, entering via `parent`.
struct TraversalEntry {
  Vertex target;
  int32_t hop;
  Vertex parent;

  friend auto operator<=>(const TraversalEntry&, const TraversalEntry&) = default;
};

// Traversal of G - {v} started at s, a neighbor of v. With d() the BFS
// distance from s in G - {v}, every edge (u, t) of G - {v} with d(u) finite
// yields the entry (t, d(u) + 1, u), and symmetrically for t. The result is
// determined by distances and the edge set alone, never by queue order, so
// both the BFS-tree path and later "closing" edges are recorded.
//
// Entries are sorted. Throws std::invalid_argument if s is not adjacent to v
// and std::out_of_range if v is not a vertex.
std::vector<TraversalEntry> DeletedNeighborhoodBfs(const Graph& g, Vertex v,
                                                   Vertex s);

// Aggregated observations for one (source, target, hop-from-source).
struct HopGroup {
  int32_t hop;    // traversal hop + 1 (the edge from the source to the start)
  int32_t count;  // distinct traversal starts contributing to this hop
  std::vector<Vertex> parents;  // sorted, non-empty

  friend bool operator==(const HopGroup&, const HopGroup&) = default;
};

class HopParentIndex {
 public:
  HopParentIndex(Vertex source, std::vector<std::vector<HopGroup>> groups)
      : source_(source), groups_(std::move(groups)) {}

  Vertex source() const { return source_; }
  int num_targets() const { return static_cast<int>(groups_.size()); }
  // Groups in strictly increasing hop order. Empty for the source itself and
  // for targets no traversal reached.
  std::span<const HopGroup> Groups(Vertex target) const { return groups_[target]; }

  friend bool operator==(const HopParentIndex&, const HopParentIndex&) = default;

 private:
  Vertex source_;
  std::vector<std::vector<HopGroup>> groups_;
};

// Runs DeletedNeighborhoodBfs from every neighbor of v and groups the
// entries per target by hop-from-v.
HopParentIndex AggregateHopParents(const Graph& g, Vertex v);

}  // namespace rsvp

#endif  // RSVP_REACHABILITY_H_
