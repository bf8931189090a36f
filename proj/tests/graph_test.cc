// Copyright 2026 The Authors.
//
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

#include "fraccomp/graph.h"

#include <random>

#include <gtest/gtest.h>

#include "corpus.h"
#include "fraccomp/domination.h"
#include "lp_oracle.h"
#include "test_util.h"

namespace fraccomp {
namespace {

using testing::CodeOf;

Digraph DirectedTriangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(GraphTest, NormalizesEdges) {
  const Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<VertexPair>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(GraphTest, RejectsLoopsAndRange) {
  EXPECT_EQ(CodeOf([] { Graph(2, {{0, 0}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { Graph(2, {{0, 2}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { Digraph(2, {{1, 1}}); }), ErrorCode::kInvalidArgument);
}

TEST(GraphTest, ConnectivityAndBipartiteness) {
  EXPECT_TRUE(IsConnected(testing::Cycle(5)));
  EXPECT_FALSE(IsConnected(Graph(3, {{0, 1}})));
  EXPECT_TRUE(IsBipartite(testing::Cycle(6)));
  EXPECT_FALSE(IsBipartite(testing::Cycle(5)));
  EXPECT_TRUE(IsBipartite(Graph(4, {})));
}

TEST(GraphTest, SymmetricDigraph) {
  const Digraph d = ToSymmetricDigraph(Graph(3, {{0, 2}}));
  EXPECT_EQ(d.arcs(), (std::vector<VertexPair>{{0, 2}, {2, 0}}));
}

TEST(GraphFormatTest, NativeFormat) {
  const GraphFile f = ParseGraphFile("# c5\ngraph 3\n0 1\n1 2\n");
  ASSERT_TRUE(std::holds_alternative<Graph>(f));
  EXPECT_EQ(std::get<Graph>(f), Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(FormatGraph(std::get<Graph>(f)), "graph 3\n0 1\n1 2\n");
  const GraphFile d = ParseGraphFile("digraph 2\n1 0\n");
  ASSERT_TRUE(std::holds_alternative<Digraph>(d));
  EXPECT_TRUE(std::get<Digraph>(d).has_arc(1, 0));
  EXPECT_FALSE(std::get<Digraph>(d).has_arc(0, 1));
}

TEST(GraphFormatTest, Dimacs) {
  const GraphFile f = ParseGraphFile("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  ASSERT_TRUE(std::holds_alternative<Graph>(f));
  EXPECT_EQ(std::get<Graph>(f), testing::Complete(3));
}

TEST(GraphFormatTest, Rejects) {
  for (const char* text :
       {"", "graph 0\n", "graph 2\n0 2\n", "graph 2\n1 1\n", "graph 2\n0\n",
        "tree 3\n", "p edge 2 1\ne 0 1\n", "p edge 2 1\ne 1 3\n"}) {
    EXPECT_EQ(CodeOf([&] { ParseGraphFile(text); }), ErrorCode::kParse) << text;
  }
}

TEST(NeighborhoodTest, DirectedTriangleClosedIn) {
  const Hypergraph h = NeighborhoodHypergraph(
      DirectedTriangle(), {NeighborSide::kIn, Closure::kClosed});
  EXPECT_EQ(h.edges(), (std::vector<VertexSet>{{0, 2}, {0, 1}, {1, 2}}));
}

TEST(NeighborhoodTest, MatrixIdentities) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph d = testing::RandomDigraph(rng, 1 + trial % 7, 0.4);
    const int n = d.num_vertices();
    const RationalMatrix in_open =
        IncidenceMatrix(NeighborhoodHypergraph(d, {NeighborSide::kIn, Closure::kOpen}));
    const RationalMatrix in_closed = IncidenceMatrix(
        NeighborhoodHypergraph(d, {NeighborSide::kIn, Closure::kClosed}));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const Rational arc = d.has_arc(u, v) ? 1 : 0;
        EXPECT_EQ(in_open(static_cast<size_t>(u), static_cast<size_t>(v)), arc);
        EXPECT_EQ(in_closed(static_cast<size_t>(u), static_cast<size_t>(v)),
                  arc + Rational(u == v ? 1 : 0));
      }
    }
    EXPECT_EQ(IncidenceMatrix(Dual(NeighborhoodHypergraph(
                  d, {NeighborSide::kIn, Closure::kOpen}))),
              IncidenceMatrix(
                  NeighborhoodHypergraph(d, {NeighborSide::kOut, Closure::kOpen})));
    EXPECT_EQ(Complement(NeighborhoodHypergraph(d, {NeighborSide::kOut, Closure::kOpen})),
              NeighborhoodHypergraph(Complement(d),
                                     {NeighborSide::kOut, Closure::kClosed}));
    EXPECT_EQ(Complement(Complement(d)), d);
  }
}

TEST(DigraphComplementTest, Examples) {
  EXPECT_EQ(Complement(DirectedTriangle()), Digraph(3, {{1, 0}, {2, 1}, {0, 2}}));
  EXPECT_EQ(Complement(ToSymmetricDigraph(testing::Complete(4))), Digraph(4, {}));
  const Digraph t = DirectedTriangle();
  EXPECT_EQ(NeighborhoodHypergraph(Complement(t), {NeighborSide::kOut, Closure::kOpen}),
            NeighborhoodHypergraph(t, {NeighborSide::kIn, Closure::kOpen}));
}

TEST(SpecTest, RoundTrip) {
  for (const char* name : {"in-open", "in-closed", "out-open", "out-closed"}) {
    EXPECT_EQ(SpecName(ParseSpec(name)), name);
  }
  EXPECT_EQ(CodeOf([] { ParseSpec("sideways"); }), ErrorCode::kParse);
}

TEST(FractionalDominationTest, C5) {
  const Digraph c5 = ToSymmetricDigraph(testing::Cycle(5));
  EXPECT_EQ(FractionalDomination(c5, {NeighborSide::kIn, Closure::kClosed}),
            Rational(5, 3));
  EXPECT_EQ(FractionalDomination(c5, {NeighborSide::kIn, Closure::kOpen}),
            Rational(5, 2));
}

TEST(FractionalDominationTest, SourceHasNoTotalDominatingSet) {
  EXPECT_EQ(CodeOf([] {
              FractionalDomination(Digraph(2, {{0, 1}}),
                                   {NeighborSide::kIn, Closure::kOpen});
            }),
            ErrorCode::kNoTotalDominatingSet);
}

TEST(FractionalDominationTest, AgreesWithVertexOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph d = testing::RandomDigraph(rng, 2 + trial % 4, 0.5);
    const NeighborhoodSpec spec{NeighborSide::kIn, Closure::kClosed};
    const testing::OracleOutcome oracle = testing::ClassifyByVertices(
        ParameterLp(NeighborhoodHypergraph(d, spec), ParamKind::kTransversal));
    ASSERT_EQ(oracle.kind, testing::OracleKind::kOptimal);
    EXPECT_EQ(FractionalDomination(d, spec), *oracle.value);
  }
}

TEST(VerifyDominationTest, C5) {
  const DominationReport r = VerifyDomination(ToSymmetricDigraph(testing::Cycle(5)));
  EXPECT_EQ(r.gamma_in, Rational(5, 3));
  EXPECT_EQ(r.upper_out_complement, Rational(5, 2));
  EXPECT_TRUE(r.identity_holds);
  EXPECT_EQ(r.regular_degree, 2);
  EXPECT_EQ(r.regular_holds, true);
  EXPECT_TRUE(r.all_hold);
}

TEST(VerifyDominationTest, Petersen) {
  const DominationReport r = VerifyDomination(ToSymmetricDigraph(testing::Petersen()));
  EXPECT_EQ(r.gamma_in, Rational(5, 2));
  EXPECT_EQ(r.upper_out, Rational(10, 3));
  EXPECT_EQ(r.regular_holds, true);
  EXPECT_TRUE(r.all_hold);
}

TEST(VerifyDominationTest, DirectedTriangleTournament) {
  const DominationReport r = VerifyDomination(DirectedTriangle());
  EXPECT_TRUE(r.is_tournament);
  EXPECT_EQ(r.gamma_in, Rational(3, 2));
  EXPECT_EQ(r.upper_in, Rational(3));
  EXPECT_EQ(r.tournament_holds, true);
  EXPECT_TRUE(r.all_hold);
}

TEST(VerifyDominationTest, InUniversalVertex) {
  EXPECT_EQ(CodeOf([] { VerifyDomination(Digraph(3, {{0, 1}, {0, 2}})); }),
            ErrorCode::kInUniversalVertex);
}

bool HasInUniversal(const Digraph& d) {
  const int n = d.num_vertices();
  for (int v = 0; v < n; ++v) {
    bool all = true;
    for (int u = 0; u < n; ++u) all = all && (u == v || d.has_arc(v, u));
    if (all) return true;
  }
  return false;
}

TEST(VerifyDominationTest, RandomDigraphs) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph d = testing::RandomDigraph(rng, 1 + trial % 7, 0.45);
    if (HasInUniversal(d)) continue;
    ++checked;
    EXPECT_TRUE(VerifyDomination(d).all_hold) << "trial " << trial;
  }
  EXPECT_GT(checked, 80);
}

TEST(VerifyDominationTest, RandomTournaments) {
  std::mt19937_64 rng(14);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    std::vector<VertexPair> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) {
          arcs.emplace_back(u, v);
        } else {
          arcs.emplace_back(v, u);
        }
      }
    }
    const Digraph t(n, arcs);
    if (HasInUniversal(t)) continue;
    const DominationReport r = VerifyDomination(t);
    EXPECT_EQ(r.tournament_holds, true);
    EXPECT_EQ(r.upper_in, r.upper_out_complement);
  }
}

TEST(VerifyDominationTest, GraphsWithoutUniversalVertices) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomGraph(rng, 2 + trial % 6, 0.5);
    const Digraph d = ToSymmetricDigraph(g);
    if (HasInUniversal(d)) continue;
    EXPECT_TRUE(VerifyDomination(d).identity_holds);
  }
}

}  // namespace
}  // namespace fraccomp
