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

#include "fraccomp/vertex_cover.h"

#include <algorithm>
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
using testing::Path;

int FloorRatio(int num, int den) { return num / den; }

TEST(VertexCoverTest, Predicates) {
  EXPECT_TRUE(IsVertexCover(Cycle(4), {0, 2}));
  EXPECT_FALSE(IsVertexCover(Cycle(4), {0, 1}));
  EXPECT_EQ(BudgetUsed(3, {{0, 1}, {1, 2}}), 2);
  EXPECT_TRUE(IsValidCoverFamily(Cycle(4), {{{0, 2}, {1, 3}}, 1}, 1));
  EXPECT_FALSE(IsValidCoverFamily(Cycle(4), {{{0, 2}, {0, 2}}, 2}, 1));
  EXPECT_FALSE(IsValidCoverFamily(Cycle(4), {{{0, 2}, {1, 3}}, 2}, 2));
}

TEST(BudgetCoverTest, Examples) {
  EXPECT_EQ(BudgetCover(Complete(3), 2).t, 3);
  EXPECT_EQ(BudgetCover(Cycle(6), 3).t, 6);
  const BudgetCoverResult c5 = BudgetCover(Cycle(5), 3);
  EXPECT_EQ(c5.t, 5);
  std::vector<VertexSet> covers = c5.witness.covers;
  std::sort(covers.begin(), covers.end());
  EXPECT_EQ(covers, testing::BruteMinimalCovers(Cycle(5)));
}

TEST(BudgetCoverTest, ZeroExtraUsesCopiesOfVertexSet) {
  const BudgetCoverResult r = BudgetCover(Complete(4), 2);
  EXPECT_EQ(r.c, 0);
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(r.witness.covers,
            (std::vector<VertexSet>{{0, 1, 2, 3}, {0, 1, 2, 3}}));
  EXPECT_EQ(r.witness.budget_used, 2);
}

TEST(BudgetCoverTest, Errors) {
  EXPECT_EQ(CodeOf([] { BudgetCover(Graph(3, {}), 1); }), ErrorCode::kEmptyGraph);
  EXPECT_EQ(CodeOf([] { BudgetCover(Cycle(3), 0); }), ErrorCode::kInvalidArgument);
}

TEST(BudgetCoverTest, CompleteGraphFormula) {
  for (int n = 2; n <= 5; ++n) {
    for (int b = 1; b <= 6; ++b) {
      EXPECT_EQ(BudgetCover(Complete(n), b).t, FloorRatio(n * b, n - 1))
          << "n=" << n << " b=" << b;
    }
  }
}

TEST(BudgetCoverTest, BipartiteDoubles) {
  for (int b = 1; b <= 4; ++b) {
    EXPECT_EQ(BudgetCover(Cycle(6), b).t, 2 * b);
    EXPECT_EQ(BudgetCover(Path(4), b).t, 2 * b);
  }
}

TEST(BudgetCoverTest, MatchesFamilySearch) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      if (g.num_edges() == 0) continue;
      for (int b = 1; b <= 3; ++b) {
        const BudgetCoverResult r = BudgetCover(g, b);
        EXPECT_EQ(r.t, testing::BruteBudgetCover(g, b)) << FormatGraph(g) << b;
        EXPECT_EQ(static_cast<int>(r.witness.covers.size()), r.t);
        EXPECT_TRUE(IsValidCoverFamily(g, r.witness, b));
      }
    }
  }
}

TEST(BudgetCoverTest, MatchesFamilySearchOnSixVertices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomGraph(rng, 6, 0.5);
    if (g.num_edges() == 0) continue;
    for (int b = 1; b <= 3; ++b) {
      EXPECT_EQ(BudgetCover(g, b).t, testing::BruteBudgetCover(g, b));
    }
  }
}

TEST(BudgetCoverTest, HomomorphismSandwich) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::RandomGraph(rng, 2 + trial % 5, 0.5);
    if (g.num_edges() == 0) continue;
    const int chi = ChromaticNumber(g);
    const int omega = CliqueNumber(g);
    for (int b = 1; b <= 3; ++b) {
      const int t = BudgetCover(g, b).t;
      EXPECT_LE(BudgetCover(Complete(chi), b).t, t);
      EXPECT_LE(t, BudgetCover(Complete(omega), b).t);
    }
  }
}

TEST(CFoldTableTest, MatchesDirectComputation) {
  CFoldTable table(Cycle(5));
  EXPECT_EQ(table.chi(0), 0);
  EXPECT_EQ(table.chi(1), 3);
  EXPECT_EQ(table.chi(2), 5);
  EXPECT_EQ(table.chi(3), 8);
  for (int c = 1; c <= 3; ++c) {
    EXPECT_EQ(table.chi(c), testing::BruteChromatic(LexicographicProduct(Cycle(5), c)));
  }
}

TEST(VerifyBudgetTest, C5) {
  const BudgetReport r = VerifyBudget(Cycle(5), 3);
  ASSERT_EQ(r.rows.size(), 3u);
  const int t[] = {1, 3, 5};
  const int lower[] = {1, 3, 4};
  const int upper[] = {2, 4, 6};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(r.rows[static_cast<size_t>(i)].t, t[i]);
    EXPECT_EQ(r.rows[static_cast<size_t>(i)].floor_lower, lower[i]);
    EXPECT_EQ(r.rows[static_cast<size_t>(i)].floor_upper, upper[i]);
  }
  EXPECT_EQ(r.beta, 3);
  EXPECT_EQ(r.beta_multiples_hold, true);
  EXPECT_FALSE(r.bipartite);
  EXPECT_TRUE(r.bipartite_equivalence_holds);
  EXPECT_TRUE(r.all_hold);
}

TEST(VerifyBudgetTest, C6) {
  const BudgetReport r = VerifyBudget(Cycle(6), 3);
  for (const BudgetRow& row : r.rows) EXPECT_EQ(row.t, 2 * row.b);
  EXPECT_TRUE(r.bipartite);
  EXPECT_TRUE(r.kappa_is_two);
  EXPECT_TRUE(r.some_b_doubles);
  EXPECT_TRUE(r.all_b_double);
  EXPECT_EQ(r.beta, 1);
  EXPECT_TRUE(r.all_hold);
}

TEST(VerifyBudgetTest, K4) {
  const BudgetReport r = VerifyBudget(Complete(4), 3);
  EXPECT_EQ(r.rows[0].t, 1);
  EXPECT_EQ(r.rows[1].t, 2);
  EXPECT_EQ(r.rows[2].t, 4);
  EXPECT_EQ(r.kappa, Rational(4, 3));
  EXPECT_EQ(r.beta, 3);
  EXPECT_TRUE(r.all_hold);
}

TEST(VerifyBudgetTest, SmallConnectedGraphs) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::ConnectedGraphsUpToIsomorphism(n)) {
      const BudgetReport r = VerifyBudget(g, 3);
      EXPECT_TRUE(r.all_hold) << FormatGraph(g);
    }
  }
}

TEST(VerifyBudgetTest, Errors) {
  EXPECT_EQ(CodeOf([] { VerifyBudget(Graph(2, {}), 2); }), ErrorCode::kEmptyGraph);
  EXPECT_EQ(CodeOf([] { VerifyBudget(Cycle(3), 0); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace fraccomp
