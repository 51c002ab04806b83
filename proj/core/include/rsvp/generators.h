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

#ifndef RSVP_GENERATORS_H_
#define RSVP_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rsvp/graph.h"

namespace rsvp {

Graph Cycle(int k);
Graph Complete(int k);
Graph PathGraph(int k);
// Vertices of `b` follow those of `a`.
Graph DisjointUnion(const Graph& a, const Graph& b);
// k x k rook's graph (line graph of K_{k,k}); vertex (r, c) is r * k + c.
Graph Rook(int k);
// rows x cols lattice with 4-neighborhood.
Graph Grid(int rows, int cols);
// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph Shrikhande();
// q prime, q = 1 mod 4; i ~ j iff i - j is a nonzero square mod q.
Graph Paley(int q);
// Uniform over graphs with exactly m edges.
Graph RandomGnm(int n, int64_t m, uint64_t seed);
// Configuration model; pairings containing loops or multi-edges are redrawn.
Graph RandomRegular(int n, int d, uint64_t seed);
// Six vertices, seven edges; v1..v6 are ids 0..5.
Graph Fig2Fixture();

// Textual generator description, e.g. `shrikhande`, `rook(4)`, `cycle:6`,
// `disjoint_union(complete(3),complete(3))`, `permute(paley(13),7)`.
struct GeneratorSpec {
  using Arg = std::variant<int64_t, GeneratorSpec>;
  std::string family;
  std::vector<Arg> args;
};

// Throws std::invalid_argument on syntax errors.
GeneratorSpec ParseGeneratorSpec(std::string_view text);
std::string ToString(const GeneratorSpec& spec);

// Throws std::invalid_argument for unknown families or invalid parameters.
Graph Generate(const GeneratorSpec& spec);
Graph Generate(std::string_view spec_text);

// Names accepted by Generate, for help output.
std::vector<std::string> GeneratorFamilies();

}  // namespace rsvp

#endif  // RSVP_GENERATORS_H_
