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

#ifndef RSVP_SIGNATURE_H_
#define RSVP_SIGNATURE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsvp/distances.h"
#include "rsvp/graph.h"
#include "rsvp/rational.h"
#include "rsvp/reachability.h"

namespace rsvp {

// The h-th odd prime: 1 -> 3, 2 -> 5, 3 -> 7, 4 -> 11, ... Thread-safe; the
// backing table grows on demand. Throws std::invalid_argument for h < 1.
int64_t HopPrime(int32_t h);

// Average pairwise original-graph distance over a parent set. A singleton
// contributes 1; an unreachable pair contributes 0 to the sum. Throws
// std::invalid_argument for an empty set.
Rational AveragePairwiseDistance(std::span<const Vertex> parents,
                                 const DistanceMatrix& distances);

// Product over groups of AveragePairwiseDistance(parents) * HopPrime(hop)^count;
// 0/1 for an empty group list (the source itself, or unreachable targets).
Rational SignatureElement(std::span<const HopGroup> groups,
                          const DistanceMatrix& distances);

// Sorted multiset of the n signature elements of one vertex.
class Signature {
 public:
  Signature() = default;
  // Sorts `elements`.
  explicit Signature(std::vector<Rational> elements);

  std::span<const Rational> elements() const { return elements_; }
  size_t size() const { return elements_.size(); }

  // Comma-separated "<num>/<den>" elements.
  std::string ToString() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b);

 private:
  std::vector<Rational> elements_;
};

// `distances` must be ComputeDistanceMatrix(g).
Signature VertexSignature(const Graph& g, Vertex v,
                          const DistanceMatrix& distances);

// Signature of every vertex, indexed by vertex id.
std::vector<Signature> VertexSignatures(const Graph& g);

// Sorted multiset of vertex signatures. Isomorphic graphs always produce
// equal certificates; the converse does not hold.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::vector<Signature> signatures);

  std::span<const Signature> signatures() const { return signatures_; }

  // One signature per line, lines in byte order, each terminated by '\n'.
  std::string Serialize() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  std::vector<Signature> signatures_;
};

Certificate ComputeCertificate(const Graph& g);

struct RsvpVerdict {
  enum class Kind { kNonIsomorphic, kCertificatesEqual };
  Kind kind = Kind::kNonIsomorphic;
  // Set for kCertificatesEqual: a candidate mapping from the first graph's
  // vertices to the second's pairing up equal signatures. Check it with
  // VerifyMapping before treating it as an isomorphism.
  std::optional<Permutation> mapping;

  bool certificates_equal() const { return kind == Kind::kCertificatesEqual; }
};

RsvpVerdict RsvpCompare(const Graph& g1, const Graph& g2);

// True iff f maps the edges of g1 exactly onto the edges of g2. Throws
// std::invalid_argument when the vertex counts or f's size disagree.
bool VerifyMapping(const Graph& g1, const Graph& g2, const Permutation& f);

}  // namespace rsvp

#endif  // RSVP_SIGNATURE_H_
