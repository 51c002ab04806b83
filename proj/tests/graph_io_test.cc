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

#include "rsvp/graph_io.h"

#include <sstream>

#include "gtest/gtest.h"
#include "rsvp/generators.h"
#include "rsvp/random.h"
#include "test_util.h"

namespace rsvp {
namespace {

TEST(DimacsTest, MinimalInput) {
  const ParsedGraph p = ParseDimacs("p edge 2 1\ne 1 2");
  EXPECT_EQ(p.graph, Complete(2));
  EXPECT_TRUE(p.warnings.empty());
}

TEST(DimacsTest, CommentsIgnored) {
  const ParsedGraph p = ParseDimacs("c hi\np edge 3 3\ne 1 2\ne 2 3\ne 1 3");
  EXPECT_EQ(p.graph, Complete(3));
}

TEST(DimacsTest, SelfLoopIsErrorWithLine) {
  try {
    ParseDimacs("p edge 2 1\ne 1 1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(DimacsTest, MalformedLinesNameTheLine) {
  struct Case {
    const char* text;
    int line;
  } cases[] = {
      {"p edge 3 1\ne 1 4", 2},         // id outside 1..n
      {"p edge 3 1\ne 0 1", 2},         // ids are 1-based
      {"e 1 2\np edge 2 1", 1},         // edge before problem line
      {"p edge 2 1\ne 1 x", 2},         // not an integer
      {"p edge 2 1\ne 1", 2},           // missing endpoint
      {"p edge 2 1\np edge 2 1", 2},    // second problem line
      {"p col 2 1", 1},                 // only `edge` problems
      {"p edge 2 1\nx 1 2", 2},         // unknown line type
  };
  for (const auto& c : cases) {
    try {
      ParseDimacs(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text;
    }
  }
  EXPECT_THROW(ParseDimacs("c only a comment\n"), ParseError);
}

TEST(DimacsTest, DuplicatesCollapseWithWarning) {
  const ParsedGraph p = ParseDimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  EXPECT_EQ(p.graph.num_edges(), 2);
  // One duplicate warning and one declared-count mismatch.
  EXPECT_EQ(p.warnings.size(), 2u);
}

TEST(DimacsTest, ColorLinesIgnoredWithWarning) {
  const ParsedGraph p = ParseDimacs("p edge 2 1\nn 1 5\nn 2 5\ne 1 2\n");
  EXPECT_EQ(p.graph, Complete(2));
  EXPECT_EQ(p.warnings.size(), 1u);
}

TEST(DimacsTest, HandlesCrlf) {
  EXPECT_EQ(ParseDimacs("p edge 2 1\r\ne 1 2\r\n").graph, Complete(2));
}

TEST(DimacsTest, FixedSerialization) {
  EXPECT_EQ(ToDimacs(Complete(2)), "p edge 2 1\ne 1 2\n");
}

TEST(EdgeListTest, ParsesPath) {
  EXPECT_EQ(ParseEdgeList("3\n0 1\n1 2").graph, PathGraph(3));
  EXPECT_EQ(ParseEdgeList("# c\n3\n# c\n0 1\n1 2\n").graph, PathGraph(3));
}

TEST(EdgeListTest, Errors) {
  EXPECT_THROW(ParseEdgeList("2\n0 0"), ParseError);
  EXPECT_THROW(ParseEdgeList("2\n0 2"), ParseError);
  EXPECT_THROW(ParseEdgeList("2 3\n0 1"), ParseError);
  EXPECT_THROW(ParseEdgeList(""), ParseError);
}

TEST(RoundTripTest, ShrikhandeBothFormats) {
  const Graph s = Shrikhande();
  EXPECT_EQ(ParseDimacs(ToDimacs(s)).graph, s);
  EXPECT_EQ(ParseEdgeList(ToEdgeList(s)).graph, s);
}

TEST(RoundTripTest, RandomGraphsProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomMixedGraph(rng, 30);
    const ParsedGraph back = ParseGraph(ToDimacs(g), GraphFormat::kAuto);
    EXPECT_EQ(back.graph, g);
    EXPECT_TRUE(back.warnings.empty());
    EXPECT_EQ(ParseGraph(ToEdgeList(g), GraphFormat::kAuto).graph, g);
  }
}

TEST(ReadGraphTest, StdinAndMissingFile) {
  std::istringstream in("p edge 2 1\ne 1 2\n");
  EXPECT_EQ(ReadGraph("-", GraphFormat::kAuto, in).graph, Complete(2));
  std::istringstream empty;
  EXPECT_THROW(ReadGraph("/nonexistent/graph.dimacs", GraphFormat::kAuto, empty),
               std::runtime_error);
}

}  // namespace
}  // namespace rsvp
