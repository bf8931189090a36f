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

#ifndef FRACCOMP_MATROID_H_
#define FRACCOMP_MATROID_H_

#include <optional>
#include <span>
#include <vector>

#include "fraccomp/error.h"
#include "fraccomp/graph.h"
#include "fraccomp/hypergraph.h"
#include "fraccomp/rational.h"

namespace fraccomp {

// A matroid given by its list of bases, sorted and duplicate-free.
class Matroid {
 public:
  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<VertexSet>& bases() const { return bases_; }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  friend Matroid FromBases(const Hypergraph& h, bool validate);

  int n_ = 0;
  int rank_ = 0;
  std::vector<VertexSet> bases_;
};

// Edges of h are the bases; repeats collapse. Throws kInvalidArgument without
// edges, kUnequalBasisSizes, and with `validate` kExchangeAxiomViolated.
Matroid FromBases(const Hypergraph& h, bool validate = false);

Hypergraph BasisHypergraph(const Matroid& m);

// max over bases of |s cap B|. Throws kInvalidArgument on an element outside
// the ground set.
int Rank(const Matroid& m, std::span<const int> s);

// Bases are the complements of the bases of m.
Matroid Dual(const Matroid& m);

// Elements in every basis.
std::vector<int> Coloops(const Matroid& m);
// Elements in no basis.
std::vector<int> Loops(const Matroid& m);

// min |V \ S| / (rank(V) - rank(S)) over S with rank(S) < rank(V), by full
// subset enumeration. Throws kRankZero or kBudgetExceeded.
Rational EdgeToughness(const Matroid& m, const EnumerationBudget& budget = {});

// Ground set is the edge list of g in order; bases are the spanning trees.
// Throws kDisconnected (also for graphs without edges) or kBudgetExceeded.
Matroid CycleMatroid(const Graph& g, const EnumerationBudget& budget = {});

// min |Z| / (c(G - Z) - 1) over edge sets Z whose removal disconnects.
// Throws kNoEdges or kBudgetExceeded.
Rational EdgeToughness(const Graph& g, const EnumerationBudget& budget = {});

// rank of dual(m) on T equals |T| - rank(V) + rank(V \ T) for every T.
bool DualRankFormulaHolds(const Matroid& m,
                          const EnumerationBudget& budget = {});

struct MatroidTheoremReport {
  Rational matching_f;     // mu_f of the basis hypergraph
  Rational transversal_f;  // tau_f of the basis hypergraph
  Rational toughness;
  bool coincide = false;   // all three equal

  // k_f = alpha on the basis hypergraph; absent when m has a loop (the
  // covering LP is infeasible).
  std::optional<Rational> covering_f;
  std::optional<Rational> alpha;
  std::optional<bool> covering_equals_alpha;

  Rational beta_dual;  // beta of the dual of the basis hypergraph
  bool toughness_equals_beta = false;

  bool all_hold = false;
};

// Throws kTrivialMatroid for rank zero or a coloop.
MatroidTheoremReport VerifyMatroidTheorem(
    const Matroid& m, const EnumerationBudget& budget = {});

}  // namespace fraccomp

#endif  // FRACCOMP_MATROID_H_
