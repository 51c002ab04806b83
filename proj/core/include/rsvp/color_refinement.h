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

#ifndef RSVP_COLOR_REFINEMENT_H_
#define RSVP_COLOR_REFINEMENT_H_

#include <span>
#include <vector>

#include "rsvp/graph.h"

namespace rsvp {

// Stable 1-WL coloring. Color ids are dense in [0, num_colors) and ordered
// canonically, so equal ids mean the same thing across graphs refined
// together.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
  int rounds = 0;  // refinement rounds that split at least one class
};

// One refinement round: each vertex is recolored by (its color, sorted
// multiset of neighbor colors); new ids follow the sorted order of those keys.
std::vector<int> RefineOnce(const Graph& g, std::span<const int> colors);

// Iterates RefineOnce from the uniform coloring until no class splits.
Coloring ColorRefinement(const Graph& g);

// Class size per color id for vertices [begin, end).
std::vector<int> ColorHistogram(std::span<const int> colors, int num_colors,
                                Vertex begin, Vertex end);

enum class WlVerdict { kNonIsomorphic, kPossiblyIsomorphic };

// Refines the disjoint union of g1 and g2 and compares per-graph class sizes.
WlVerdict WlCompare(const Graph& g1, const Graph& g2);

}  // namespace rsvp

#endif  // RSVP_COLOR_REFINEMENT_H_
