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

#include "fraccomp/coloring.h"

#include <random>

#include <gtest/gtest.h>

#include "corpus.h"
#include "graph_oracle.h"
#include "test_util.h"

namespace fraccomp {
namespace {

using testing::CodeOf;
using testing::Complete;
using testing::Cycle;
using testing::Petersen;

bool ProperColoring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices()) return false;
  for (int color : c.colors) {
    if (color < 0 || color >= c.num_colors) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)]) {
      return false;
    }
  }
  return true;
}

TEST(MaximalIndependentSetsTest, Examples) {
  EXPECT_EQ(MaximalIndependentSets(Cycle(5)),
            (std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
  EXPECT_EQ(MaximalIndependentSets(Complete(4)),
            (std::vector<VertexSet>{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(MaximalIndependentSets(Graph(3, {})),
            (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(MaximalIndependentSetsTest, MatchesSubsetScan) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      EXPECT_EQ(MaximalIndependentSets(g), testing::BruteMaximalIndependentSets(g));
    }
  }
}

TEST(MaximalIndependentSetsTest, Budget) {
  EXPECT_EQ(CodeOf([] { MaximalIndependentSets(Petersen(), EnumerationBudget{3}); }),
            ErrorCode::kBudgetExceeded);
}

TEST(FractionalChromaticTest, Examples) {
  EXPECT_EQ(FractionalChromatic(Cycle(5)), Rational(5, 2));
  EXPECT_EQ(FractionalChromatic(KneserGraph(5, 2)), Rational(5, 2));
  EXPECT_EQ(FractionalChromatic(Cycle(6)), Rational(2));
  EXPECT_EQ(CodeOf([] { FractionalChromatic(Graph(3, {})); }), ErrorCode::kEmptyGraph);
}

TEST(FractionalChromaticTest, KneserFamily) {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 2}}) {
    EXPECT_EQ(FractionalChromatic(KneserGraph(n, r)), Rational(n, r));
  }
}

TEST(KappaTest, Examples) {
  const KappaResult c5 = KappaF(Cycle(5));
  EXPECT_EQ(c5.kappa, Rational(5, 3));
  EXPECT_EQ(c5.chi_f, Rational(5, 2));
  EXPECT_TRUE(c5.identity_holds);
  const KappaResult k4 = KappaF(Complete(4));
  EXPECT_EQ(k4.kappa, Rational(4, 3));
  EXPECT_EQ(k4.chi_f, Rational(4));
  const KappaResult c6 = KappaF(Cycle(6));
  EXPECT_EQ(c6.kappa, Rational(2));
  EXPECT_EQ(c6.chi_f, Rational(2));
  EXPECT_EQ(CodeOf([] { KappaF(Graph(2, {})); }), ErrorCode::kEmptyGraph);
}

// Restricting to minimal covers and maximal independent sets loses nothing.
TEST(KappaTest, ReductionMatchesFullHypergraphs) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      if (g.num_edges() == 0) continue;
      const KappaResult r = KappaF(g);
      EXPECT_EQ(r.kappa, FractionalParam(testing::AllVertexCoversHypergraph(g),
                                         ParamKind::kMatching));
      EXPECT_EQ(r.chi_f, FractionalParam(testing::AllIndependentSetsHypergraph(g),
                                         ParamKind::kCovering));
    }
  }
}

TEST(KappaTest, IdentityAndRangeOnConnectedGraphs) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testing::ConnectedGraphsUpToIsomorphism(n)) {
      const KappaResult r = KappaF(g);
      EXPECT_TRUE(r.identity_holds);
      EXPECT_GT(r.kappa, Rational(1));
      EXPECT_LE(r.kappa, Rational(2));
      EXPECT_EQ(r.kappa == Rational(2), IsBipartite(g));
    }
  }
}

TEST(KappaBoundsTest, Examples) {
  const KappaBoundsReport c5 = KappaBounds(Cycle(5));
  EXPECT_EQ(c5.omega, 2);
  EXPECT_EQ(c5.chi, 3);
  EXPECT_EQ(c5.alpha, 2);
  EXPECT_EQ(c5.chi_bound, Rational(3, 2));
  EXPECT_EQ(c5.alpha_bound, Rational(5, 3));
  EXPECT_EQ(c5.omega_bound, Rational(2));
  EXPECT_TRUE(c5.all_hold);

  const KappaBoundsReport k4 = KappaBounds(Complete(4));
  EXPECT_EQ(k4.chi_bound, Rational(4, 3));
  EXPECT_EQ(k4.kappa, Rational(4, 3));
  EXPECT_EQ(k4.alpha_bound, Rational(4, 3));
  EXPECT_TRUE(k4.all_hold);

  const KappaBoundsReport p = KappaBounds(Petersen());
  EXPECT_EQ(p.chi, 3);
  EXPECT_EQ(p.alpha, 4);
  EXPECT_EQ(p.kappa, Rational(5, 3));
  EXPECT_EQ(p.alpha_bound, Rational(5, 3));
  EXPECT_TRUE(p.all_hold);
}

TEST(KappaBoundsTest, LogBoundSkippedWhenDenominatorNonPositive) {
  // chi = 2, alpha = 3: 2 - 1 - ln 3 < 0.
  const KappaBoundsReport r = KappaBounds(Cycle(6));
  EXPECT_FALSE(r.log_bound.has_value());
  EXPECT_TRUE(r.log_bound_holds);
}

TEST(KappaBoundsTest, RandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomGraph(rng, 2 + trial % 7, 0.5);
    if (g.num_edges() == 0) continue;
    EXPECT_TRUE(KappaBounds(g).all_hold) << FormatGraph(g);
  }
}

TEST(CliqueTest, Examples) {
  EXPECT_EQ(CliqueNumber(Complete(5)), 5);
  EXPECT_EQ(CliqueNumber(Petersen()), 2);
  EXPECT_EQ(IndependenceNumber(Petersen()), 4);
  EXPECT_EQ(IndependenceNumber(Cycle(7)), 3);
}

TEST(ChromaticTest, Examples) {
  EXPECT_EQ(ChromaticNumber(Complete(4)), 4);
  EXPECT_EQ(ChromaticNumber(Cycle(5)), 3);
  EXPECT_EQ(ChromaticNumber(Petersen()), 3);
  EXPECT_TRUE(testing::KColorable(Petersen(), 3));
  EXPECT_FALSE(testing::KColorable(Petersen(), 2));
  EXPECT_EQ(ChromaticNumber(Graph(3, {})), 1);
  EXPECT_EQ(ChromaticNumber(Graph(0, {})), 0);
}

TEST(ChromaticTest, MatchesExhaustiveSearch) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      const Coloring c = OptimalColoring(g);
      EXPECT_TRUE(ProperColoring(g, c));
      EXPECT_EQ(c.num_colors, testing::BruteChromatic(g)) << FormatGraph(g);
    }
  }
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomGraph(rng, 6 + trial % 5, 0.5);
    const Coloring c = OptimalColoring(g);
    EXPECT_TRUE(ProperColoring(g, c));
    EXPECT_EQ(c.num_colors, testing::BruteChromatic(g));
  }
}

TEST(ChromaticTest, Budget) {
  EXPECT_EQ(CodeOf([] { ChromaticNumber(Petersen(), EnumerationBudget{2}); }),
            ErrorCode::kBudgetExceeded);
}

TEST(LexicographicProductTest, Examples) {
  EXPECT_EQ(LexicographicProduct(Cycle(5), 1), Cycle(5));
  const Graph c5k2 = LexicographicProduct(Cycle(5), 2);
  EXPECT_EQ(c5k2.num_vertices(), 10);
  EXPECT_EQ(c5k2.num_edges(), 25);
  EXPECT_EQ(LexicographicProduct(Complete(2), 2), Complete(4));
  EXPECT_EQ(CodeOf([] { LexicographicProduct(Cycle(3), 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(LexicographicProductTest, EdgeCountFormula) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomGraph(rng, 1 + trial % 6, 0.5);
    const int c = 1 + trial % 4;
    const int n = g.num_vertices();
    EXPECT_EQ(LexicographicProduct(g, c).num_edges(),
              n * c * (c - 1) / 2 + g.num_edges() * c * c);
  }
}

TEST(CFoldChromaticTest, C5) {
  EXPECT_EQ(CFoldChromatic(Cycle(5), 1), 3);
  EXPECT_EQ(CFoldChromatic(Cycle(5), 2), 5);
  EXPECT_EQ(CFoldChromatic(Cycle(5), 3), 8);
  EXPECT_TRUE(testing::KColorable(LexicographicProduct(Cycle(5), 2), 5));
  EXPECT_FALSE(testing::KColorable(LexicographicProduct(Cycle(5), 2), 4));
}

TEST(KneserTest, Examples) {
  const Graph k52 = KneserGraph(5, 2);
  EXPECT_EQ(k52.num_vertices(), 10);
  EXPECT_EQ(k52.num_edges(), 15);
  EXPECT_EQ(KneserGraph(3, 1), Complete(3));
  const Graph k42 = KneserGraph(4, 2);
  EXPECT_EQ(k42.num_vertices(), 6);
  EXPECT_EQ(k42.num_edges(), 3);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(k42.degree(v), 1);
  EXPECT_EQ(KneserLabels(4, 2).front(), (VertexSet{0, 1}));
  EXPECT_EQ(CodeOf([] { KneserGraph(3, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { KneserGraph(3, 0); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace fraccomp
