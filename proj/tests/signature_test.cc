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

#include <stdexcept>
#include <thread>

#include "gtest/gtest.h"
#include "rsvp/generators.h"
#include "rsvp/oracle.h"
#include "rsvp/random.h"
#include "test_util.h"

namespace rsvp {
namespace {

constexpr Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3, v6 = 5;

bool IsPrimeByTrialDivision(int64_t x) {
  if (x < 2) return false;
  for (int64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

TEST(HopPrimeTest, FirstValues) {
  EXPECT_EQ(HopPrime(1), 3);
  EXPECT_EQ(HopPrime(2), 5);
  EXPECT_EQ(HopPrime(3), 7);
  EXPECT_EQ(HopPrime(4), 11);
  EXPECT_EQ(HopPrime(10), 31);
  EXPECT_THROW(HopPrime(0), std::invalid_argument);
}

TEST(HopPrimeTest, MatchesTrialDivisionAndGrowsOnDemand) {
  int64_t candidate = 2;
  for (int h = 1; h <= 3000; ++h) {
    do {
      ++candidate;
    } while (!IsPrimeByTrialDivision(candidate));
    ASSERT_EQ(HopPrime(h), candidate) << "h=" << h;
  }
}

TEST(HopPrimeTest, ConcurrentReaders) {
  std::vector<std::jthread> threads;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&ok, t] {
      for (int h = 5000 + t; h > 0; h -= 97) {
        if (!IsPrimeByTrialDivision(HopPrime(h))) ok = false;
      }
    });
  }
  threads.clear();
  EXPECT_TRUE(ok);
}

TEST(AveragePairwiseDistanceTest, FixtureValues) {
  const DistanceMatrix d = ComputeDistanceMatrix(Fig2Fixture());
  const Vertex single[] = {v2};
  EXPECT_EQ(AveragePairwiseDistance(single, d), Rational(1));
  const Vertex pair[] = {v2, v6};
  EXPECT_EQ(AveragePairwiseDistance(pair, d), Rational(2));
  const Vertex triple[] = {v2, v4, v6};
  EXPECT_EQ(AveragePairwiseDistance(triple, d), Rational(2));
  EXPECT_THROW(AveragePairwiseDistance({}, d), std::invalid_argument);
}

TEST(AveragePairwiseDistanceTest, FractionalAndUnreachable) {
  const DistanceMatrix p = ComputeDistanceMatrix(PathGraph(3));
  const Vertex all[] = {0, 1, 2};
  // (1 + 2 + 1) / 3
  EXPECT_EQ(AveragePairwiseDistance(all, p), Rational(BigInt(4), BigInt(3)));
  const DistanceMatrix u =
      ComputeDistanceMatrix(DisjointUnion(Complete(2), Complete(1)));
  // (1 + 0 + 0) / 3: unreachable pairs count as 0.
  EXPECT_EQ(AveragePairwiseDistance(all, u), Rational(BigInt(1), BigInt(3)));
}

TEST(SignatureElementTest, Values) {
  const DistanceMatrix d = ComputeDistanceMatrix(Fig2Fixture());
  EXPECT_EQ(SignatureElement({}, d), Rational(0));
  const HopGroup single[] = {{1, 1, {v2}}};
  EXPECT_EQ(SignatureElement(single, d), Rational(3));
  const HopGroup fixture[] = {{2, 2, {v2, v6}}, {4, 2, {v2, v4, v6}}};
  // (2 * 5^2) * (2 * 11^2)
  EXPECT_EQ(SignatureElement(fixture, d), Rational(12100));
}

TEST(SignatureElementTest, FixtureEndToEnd) {
  const Graph g = Fig2Fixture();
  const DistanceMatrix d = ComputeDistanceMatrix(g);
  const HopParentIndex hp = AggregateHopParents(g, v1);
  EXPECT_EQ(SignatureElement(hp.Groups(v3), d), Rational(12100));
}

TEST(VertexSignatureTest, SmallCases) {
  const Graph k2 = Complete(2);
  const DistanceMatrix d2 = ComputeDistanceMatrix(k2);
  for (Vertex v : {0, 1}) {
    EXPECT_EQ(VertexSignature(k2, v, d2).ToString(), "0/1,0/1");
  }
  const Graph isolated = DisjointUnion(Graph::FromEdges(1, {}), Cycle(5));
  const Signature s =
      VertexSignature(isolated, 0, ComputeDistanceMatrix(isolated));
  ASSERT_EQ(s.size(), 6u);
  for (const Rational& e : s.elements()) EXPECT_TRUE(e.is_zero());
}

TEST(VertexSignatureTest, CycleFourVertexTransitive) {
  const auto signatures = VertexSignatures(Cycle(4));
  for (const auto& s : signatures) {
    EXPECT_EQ(s, signatures[0]);
    EXPECT_EQ(s.size(), 4u);
  }
}

TEST(VertexSignatureTest, InvariantsHold) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 20);
    for (const Signature& s : VertexSignatures(g)) {
      ASSERT_EQ(static_cast<int>(s.size()), g.num_vertices());
      ASSERT_TRUE(std::is_sorted(s.elements().begin(), s.elements().end()));
      ASSERT_TRUE(s.elements()[0].is_zero());
      for (const Rational& e : s.elements()) {
        ASSERT_TRUE(e.denominator() > 0);
        ASSERT_TRUE(gcd(e.numerator(), e.denominator()) == 1);
      }
    }
  }
}

TEST(CertificateTest, FixtureSerializationHasGoldenElement) {
  const std::string text = ComputeCertificate(Fig2Fixture()).Serialize();
  EXPECT_NE(text.find("12100/1"), std::string::npos);
  EXPECT_EQ(ComputeCertificate(Complete(2)).Serialize(), "0/1,0/1\n0/1,0/1\n");
  EXPECT_EQ(ComputeCertificate(Graph::FromEdges(0, {})).Serialize(), "");
}

TEST(CertificateTest, SerializationLinesSorted) {
  const std::string text = ComputeCertificate(Paley(13)).Serialize();
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t end = text.find('\n', pos);
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  EXPECT_EQ(lines.size(), 13u);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(CertificateTest, PermutationInvariant) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 24);
    const Graph h = Permute(g, Permutation::Random(g.num_vertices(), rng.Next()));
    ASSERT_EQ(ComputeCertificate(g).Serialize(), ComputeCertificate(h).Serialize());
  }
}

TEST(CertificateTest, DistinguishesWlFailurePairs) {
  EXPECT_NE(ComputeCertificate(Cycle(6)),
            ComputeCertificate(DisjointUnion(Complete(3), Complete(3))));
  EXPECT_NE(ComputeCertificate(Shrikhande()), ComputeCertificate(Rook(4)));
}

TEST(RsvpCompareTest, Verdicts) {
  EXPECT_FALSE(RsvpCompare(Complete(3), PathGraph(3)).certificates_equal());
  EXPECT_FALSE(RsvpCompare(Cycle(4), Cycle(5)).certificates_equal());
  EXPECT_FALSE(RsvpCompare(Shrikhande(), Rook(4)).certificates_equal());
  const Graph g = Paley(13);
  const Graph h = Permute(g, Permutation::Random(13, 4));
  const RsvpVerdict v = RsvpCompare(g, h);
  ASSERT_TRUE(v.certificates_equal());
  ASSERT_TRUE(v.mapping.has_value());
  EXPECT_EQ(v.mapping->size(), 13);
}

TEST(RsvpCompareTest, CandidateMappingPairsEqualSignatures) {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 16);
    const Graph h = Permute(g, Permutation::Random(g.num_vertices(), rng.Next()));
    const RsvpVerdict v = RsvpCompare(g, h);
    ASSERT_TRUE(v.certificates_equal());
    const auto sg = VertexSignatures(g);
    const auto sh = VertexSignatures(h);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      ASSERT_EQ(sg[x], sh[(*v.mapping)[x]]);
    }
  }
}

TEST(VerifyMappingTest, Cases) {
  const Graph g = Fig2Fixture();
  EXPECT_TRUE(VerifyMapping(g, g, Permutation::Identity(6)));
  for (const auto& image : {std::vector<Vertex>{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}) {
    EXPECT_FALSE(VerifyMapping(Complete(3), PathGraph(3), Permutation(image)));
  }
  EXPECT_THROW(VerifyMapping(g, g, Permutation::Identity(5)),
               std::invalid_argument);
  const Graph h = Permute(g, Permutation::Random(6, 8));
  const auto f = FindIsomorphism(g, h);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(VerifyMapping(g, h, *f));
  EXPECT_FALSE(VerifyMapping(g, Cycle(6), Permutation::Identity(6)));
}

TEST(CertificateTest, ShuffledStorageIsByteIdentical) {
  Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 24);
    const std::string base = ComputeCertificate(g).Serialize();
    for (int s = 0; s < 3; ++s) {
      ASSERT_EQ(ComputeCertificate(g.WithShuffledAdjacency(rng.Next())).Serialize(),
                base);
    }
  }
}

}  // namespace
}  // namespace rsvp
