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

#ifndef RSVP_DISTANCES_H_
#define RSVP_DISTANCES_H_

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rsvp/graph.h"

namespace rsvp {

// A hop count, or the Unreachable marker. Never compare raw encodings.
class Distance {
 public:
  static constexpr Distance Unreachable() { return Distance(); }
  static constexpr Distance Finite(int32_t hops) { return Distance(hops); }

  constexpr bool reachable() const { return hops_ >= 0; }
  constexpr int32_t hops() const {
    assert(reachable());
    return hops_;
  }
  constexpr std::optional<int32_t> value() const {
    return reachable() ? std::optional<int32_t>(hops_) : std::nullopt;
  }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  constexpr Distance() = default;
  constexpr explicit Distance(int32_t hops) : hops_(hops) {}
  int32_t hops_ = -1;
};

// BFS hop distances from `source`. Throws std::out_of_range for a bad source.
std::vector<Distance> BfsDistances(const Graph& g, Vertex source);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  int size() const { return n_; }
  Distance operator()(Vertex u, Vertex w) const {
    return entries_[static_cast<size_t>(u) * n_ + w];
  }
  std::span<const Distance> Row(Vertex u) const {
    return {entries_.data() + static_cast<size_t>(u) * n_,
            static_cast<size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix ComputeDistanceMatrix(const Graph& g);
  int n_ = 0;
  std::vector<Distance> entries_;
};

// All-pairs hop distances, one BFS per vertex.
DistanceMatrix ComputeDistanceMatrix(const Graph& g);

}  // namespace rsvp

#endif  // RSVP_DISTANCES_H_
