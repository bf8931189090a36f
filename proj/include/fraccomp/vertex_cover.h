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

#ifndef FRACCOMP_VERTEX_COVER_H_
#define FRACCOMP_VERTEX_COVER_H_

#include <optional>
#include <vector>

#include "fraccomp/coloring.h"
#include "fraccomp/error.h"
#include "fraccomp/graph.h"
#include "fraccomp/hypergraph.h"
#include "fraccomp/rational.h"

namespace fraccomp {

struct CoverFamily {
  std::vector<VertexSet> covers;
  int budget_used = 0;  // max number of covers containing one vertex
};

bool IsVertexCover(const Graph& g, const VertexSet& s);
// Maximum occurrence count over vertices.
int BudgetUsed(int num_vertices, const std::vector<VertexSet>& covers);
// Every member a vertex cover, budget_used recorded correctly and <= b.
bool IsValidCoverFamily(const Graph& g, const CoverFamily& family, int b);

// Memoized c-fold chromatic numbers of one graph, with chi_0 = 0.
class CFoldTable {
 public:
  explicit CFoldTable(Graph g, EnumerationBudget budget = {});

  const Graph& graph() const { return g_; }
  int chi(int c);
  // Optimal coloring of g . K_c, c >= 1.
  const Coloring& coloring(int c);

 private:
  Graph g_;
  EnumerationBudget budget_;
  std::vector<std::optional<Coloring>> colorings_;
  std::optional<Rational> chi_f_;
};

struct BudgetCoverResult {
  int t = 0;
  int c = 0;  // t = b + c
  CoverFamily witness;
};

// Largest family of vertex covers using each vertex at most b times:
// t = b + max{c >= 0 : chi_c <= b + c}, with a witness read off an optimal
// coloring of g . K_c. Throws kEmptyGraph or kInvalidArgument (b < 1).
BudgetCoverResult BudgetCover(const Graph& g, int b,
                              const EnumerationBudget& budget = {});
BudgetCoverResult BudgetCover(CFoldTable& table, int b);

struct BudgetRow {
  int b = 0;
  int t = 0;
  int floor_lower = 0;  // floor(chi b / (chi - 1))
  int floor_upper = 0;  // floor(omega b / (omega - 1))
  bool floors_hold = false;
  bool ratio_within_kappa = false;  // t / b <= kappa_f
  bool iff_holds = false;           // for every c <= b
  bool witness_valid = false;
};

struct BudgetReport {
  Rational kappa;
  int chi = 0;
  int omega = 0;
  std::vector<BudgetRow> rows;  // b = 1..b_max
  std::vector<int> chi_c;       // chi_c for c = 0..b_max + 1
  bool monotone_scan_holds = false;

  // First b in 1..search_limit with t = kappa_f * b, if any.
  int search_limit = 0;
  std::optional<int> beta;
  // t = kappa_f * b at each multiple of beta up to b_max.
  std::optional<bool> beta_multiples_hold;

  bool bipartite = false;
  bool kappa_is_two = false;
  bool some_b_doubles = false;
  bool all_b_double = false;
  bool bipartite_equivalence_holds = false;

  bool all_hold = false;
};

// Throws kEmptyGraph or kInvalidArgument (b_max < 1).
BudgetReport VerifyBudget(const Graph& g, int b_max,
                          const EnumerationBudget& budget = {});

}  // namespace fraccomp

#endif  // FRACCOMP_VERTEX_COVER_H_
