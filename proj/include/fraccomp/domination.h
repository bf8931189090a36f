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

#ifndef FRACCOMP_DOMINATION_H_
#define FRACCOMP_DOMINATION_H_

#include <optional>
#include <string>
#include <string_view>

#include "fraccomp/graph.h"
#include "fraccomp/hypergraph.h"
#include "fraccomp/rational.h"

namespace fraccomp {

enum class NeighborSide { kIn, kOut };
enum class Closure { kOpen, kClosed };

struct NeighborhoodSpec {
  NeighborSide side = NeighborSide::kIn;
  Closure closure = Closure::kClosed;

  friend bool operator==(const NeighborhoodSpec&,
                         const NeighborhoodSpec&) = default;
};

// "in-open", "in-closed", "out-open", "out-closed".
std::string SpecName(NeighborhoodSpec spec);
// Throws kParse on anything else.
NeighborhoodSpec ParseSpec(std::string_view text);

// One edge per vertex v, in vertex order: the chosen neighborhood of v. The
// in-open neighborhood of v is {u : (u, v) is an arc}.
Hypergraph NeighborhoodHypergraph(const Digraph& d, NeighborhoodSpec spec);

// Complement within the loopless pairs.
Digraph Complement(const Digraph& d);

// tau_f of the neighborhood hypergraph. Open variants throw
// kNoTotalDominatingSet when some neighborhood is empty.
Rational FractionalDomination(const Digraph& d, NeighborhoodSpec spec);

bool IsTournament(const Digraph& d);
// k when every vertex has in-degree and out-degree k.
std::optional<int> RegularDegree(const Digraph& d);

struct DominationReport {
  Rational gamma_in;            // tau_f of the closed in-neighborhoods of d
  Rational upper_out_complement;  // tau_f of the open out-neighborhoods of d-bar
  Rational lhs;
  bool identity_holds = false;

  bool is_tournament = false;
  std::optional<Rational> upper_in;  // open in-neighborhoods of d
  std::optional<bool> tournament_holds;

  std::optional<int> regular_degree;
  std::optional<Rational> upper_out;  // open out-neighborhoods of d, k >= 1
  std::optional<bool> regular_holds;

  bool all_hold = false;
};

// Throws kInUniversalVertex when some v lies in every closed in-neighborhood.
DominationReport VerifyDomination(const Digraph& d);

}  // namespace fraccomp

#endif  // FRACCOMP_DOMINATION_H_
