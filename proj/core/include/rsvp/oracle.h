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

#ifndef RSVP_ORACLE_H_
#define RSVP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "rsvp/graph.h"

namespace rsvp {

// Default vertex limit above which callers should not run the exact search.
inline constexpr int kOracleMaxVertices = 24;

// Exact isomorphism search: backtracking restricted to matching 1-WL color
// classes, checking adjacency and non-adjacency against every vertex mapped
// so far. Returns a mapping g1 -> g2 that has been checked edge by edge, or
// nullopt if none exists. Exponential in the worst case.
std::optional<Permutation> FindIsomorphism(const Graph& g1, const Graph& g2);

// One representative per isomorphism class of graphs on exactly n vertices.
// Exhaustive for n <= 7 (seed and sample_count are ignored). Above that,
// `sample_count` random graphs drawn from `seed`, with isomorphic duplicates
// removed.
std::vector<Graph> ExhaustiveCorpus(int n, uint64_t seed = 0,
                                    int sample_count = 64);

}  // namespace rsvp

#endif  // RSVP_ORACLE_H_
