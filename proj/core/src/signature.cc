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

#include "rsvp/signature.h"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rsvp {
namespace {

class OddPrimeTable {
 public:
  int64_t Get(int32_t h) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int32_t>(primes_.size()) < h) Grow();
    return primes_[h - 1];
  }

 private:
  // Sieves [3, 2 * limit_] after doubling the bound.
  void Grow() {
    limit_ *= 2;
    std::vector<bool> composite(limit_ + 1, false);
    primes_.clear();
    for (int64_t i = 3; i <= limit_; i += 2) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (int64_t j = i * i; j <= limit_; j += 2 * i) composite[j] = true;
    }
  }

  std::mutex mu_;
  int64_t limit_ = 64;
  std::vector<int64_t> primes_ = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                  41, 43, 47, 53, 59, 61};
};

OddPrimeTable& Primes() {
  static OddPrimeTable table;
  return table;
}

}  // namespace

int64_t HopPrime(int32_t h) {
  if (h < 1) throw std::invalid_argument("hop must be >= 1");
  return Primes().Get(h);
}

Rational AveragePairwiseDistance(std::span<const Vertex> parents,
                                 const DistanceMatrix& distances) {
  if (parents.empty()) throw std::invalid_argument("empty parent list");
  if (parents.size() == 1) return Rational(1);
  int64_t total = 0;
  for (size_t i = 0; i < parents.size(); ++i) {
    for (size_t j = i + 1; j < parents.size(); ++j) {
      const Distance d = distances(parents[i], parents[j]);
      if (d.reachable()) total += d.hops();
    }
  }
  const auto k = static_cast<int64_t>(parents.size());
  return Rational(BigInt(total), BigInt(k * (k - 1) / 2));
}

Rational SignatureElement(std::span<const HopGroup> groups,
                          const DistanceMatrix& distances) {
  if (groups.empty()) return Rational(0);
  Rational product(1);
  for (const HopGroup& group : groups) {
    product *= AveragePairwiseDistance(group.parents, distances);
    product *= Rational(BigInt(pow(BigInt(HopPrime(group.hop)),
                                   static_cast<unsigned>(group.count))),
                        BigInt(1));
  }
  return product;
}

Signature::Signature(std::vector<Rational> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

std::string Signature::ToString() const {
  std::string out;
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += elements_[i].ToString();
  }
  return out;
}

std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
  return std::lexicographical_compare_three_way(
      a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
      b.elements_.end());
}

Signature VertexSignature(const Graph& g, Vertex v,
                          const DistanceMatrix& distances) {
  const HopParentIndex index = AggregateHopParents(g, v);
  std::vector<Rational> elements;
  elements.reserve(g.num_vertices());
  for (Vertex t = 0; t < g.num_vertices(); ++t) {
    elements.push_back(SignatureElement(index.Groups(t), distances));
  }
  return Signature(std::move(elements));
}

std::vector<Signature> VertexSignatures(const Graph& g) {
  const DistanceMatrix distances = ComputeDistanceMatrix(g);
  std::vector<Signature> signatures;
  signatures.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    signatures.push_back(VertexSignature(g, v, distances));
  }
  return signatures;
}

Certificate::Certificate(std::vector<Signature> signatures)
    : signatures_(std::move(signatures)) {
  std::sort(signatures_.begin(), signatures_.end());
}

std::string Certificate::Serialize() const {
  std::vector<std::string> lines;
  lines.reserve(signatures_.size());
  for (const Signature& s : signatures_) lines.push_back(s.ToString());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

Certificate ComputeCertificate(const Graph& g) {
  return Certificate(VertexSignatures(g));
}

RsvpVerdict RsvpCompare(const Graph& g1, const Graph& g2) {
  RsvpVerdict verdict;
  if (g1.num_vertices() != g2.num_vertices() ||
      g1.num_edges() != g2.num_edges()) {
    return verdict;
  }
  const int n = g1.num_vertices();
  const std::vector<Signature> s1 = VertexSignatures(g1);
  const std::vector<Signature> s2 = VertexSignatures(g2);
  auto sorted_ids = [n](const std::vector<Signature>& s) {
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(),
                     [&s](Vertex a, Vertex b) { return s[a] < s[b]; });
    return ids;
  };
  const std::vector<Vertex> order1 = sorted_ids(s1);
  const std::vector<Vertex> order2 = sorted_ids(s2);
  std::vector<Vertex> image(n);
  for (int i = 0; i < n; ++i) {
    if (s1[order1[i]] != s2[order2[i]]) return verdict;
    image[order1[i]] = order2[i];
  }
  verdict.kind = RsvpVerdict::Kind::kCertificatesEqual;
  verdict.mapping = Permutation(std::move(image));
  return verdict;
}

bool VerifyMapping(const Graph& g1, const Graph& g2, const Permutation& f) {
  if (g1.num_vertices() != g2.num_vertices() || f.size() != g1.num_vertices()) {
    throw std::invalid_argument("mapping size does not match the graphs");
  }
  if (g1.num_edges() != g2.num_edges()) return false;
  // f is a bijection and the edge counts agree, so mapping every edge onto an
  // edge also maps non-edges onto non-edges.
  for (const auto& [u, w] : g1.Edges()) {
    if (!g2.HasEdge(f[u], f[w])) return false;
  }
  return true;
}

}  // namespace rsvp
