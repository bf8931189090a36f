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

#ifndef FRACCOMP_COLORING_H_
#define FRACCOMP_COLORING_H_

#include <optional>
#include <vector>

#include "fraccomp/error.h"
#include "fraccomp/graph.h"
#include "fraccomp/hypergraph.h"
#include "fraccomp/rational.h"

namespace fraccomp {

// All maximal independent sets in lexicographic order. Bron-Kerbosch with
// pivoting; each recursive call counts against the budget.
std::vector<VertexSet> MaximalIndependentSets(
    const Graph& g, const EnumerationBudget& budget = {});

// Vertices of g; edges are the maximal independent sets.
Hypergraph IndependentSetHypergraph(const Graph& g,
                                    const EnumerationBudget& budget = {});
// Vertices of g; edges are the minimal vertex covers (complements of the
// maximal independent sets, same order).
Hypergraph MinimalCoverHypergraph(const Graph& g,
                                  const EnumerationBudget& budget = {});

// k_f of the independent-set hypergraph. Throws kEmptyGraph without edges.
Rational FractionalChromatic(const Graph& g,
                             const EnumerationBudget& budget = {});

struct KappaResult {
  Rational kappa;  // mu_f of the minimal-cover hypergraph
  Rational chi_f;
  bool identity_holds = false;  // 1/kappa + 1/chi_f == 1
};

KappaResult KappaF(const Graph& g, const EnumerationBudget& budget = {});

int CliqueNumber(const Graph& g, const EnumerationBudget& budget = {});
int IndependenceNumber(const Graph& g, const EnumerationBudget& budget = {});

struct Coloring {
  int num_colors = 0;
  std::vector<int> colors;  // color per vertex, 0-based
};

// Optimal coloring by DSATUR branch and bound, seeded with a greedy DSATUR
// upper bound and a maximum-clique lower bound. Ties broken by vertex index.
Coloring OptimalColoring(const Graph& g, const EnumerationBudget& budget = {});
// As above with an externally known lower bound on chi, used to stop early.
Coloring OptimalColoring(const Graph& g, int known_lower_bound,
                         const EnumerationBudget& budget = {});
int ChromaticNumber(const Graph& g, const EnumerationBudget& budget = {});

// g . K_c: vertex (v, a) has index v * c + a. Throws kInvalidArgument for
// c < 1.
Graph LexicographicProduct(const Graph& g, int c);

// chi(g . K_c).
int CFoldChromatic(const Graph& g, int c, const EnumerationBudget& budget = {});

struct KappaBoundsReport {
  int n = 0;
  int omega = 0;
  int chi = 0;
  int alpha = 0;
  Rational kappa;
  Rational chi_bound;    // chi / (chi - 1)
  Rational alpha_bound;  // n / (n - alpha)
  Rational omega_bound;  // omega / (omega - 1)
  bool chi_bound_holds = false;    // chi_bound <= kappa
  bool alpha_bound_holds = false;  // kappa <= alpha_bound
  bool omega_bound_holds = false;  // kappa <= omega_bound
  // chi / (chi - 1 - ln alpha), absent when the denominator is <= 0.
  std::optional<double> log_bound;
  bool log_bound_holds = true;  // kappa <= log_bound + 1e-9, or skipped
  bool all_hold = false;
};

KappaBoundsReport KappaBounds(const Graph& g,
                              const EnumerationBudget& budget = {});

// Vertices are the r-subsets of {0..n-1} in lexicographic order, adjacent
// when disjoint. Throws kInvalidArgument unless 1 <= r and 2r <= n.
Graph KneserGraph(int n, int r);
// The r-subsets in the same order.
std::vector<VertexSet> KneserLabels(int n, int r);

}  // namespace fraccomp

#endif  // FRACCOMP_COLORING_H_
