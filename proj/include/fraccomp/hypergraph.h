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

#ifndef FRACCOMP_HYPERGRAPH_H_
#define FRACCOMP_HYPERGRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fraccomp/error.h"
#include "fraccomp/linear_program.h"
#include "fraccomp/rational.h"

namespace fraccomp {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

// Vertices 0..n-1 and an ordered multiset of edges. Duplicate edges are kept
// in order; the dual emits one edge per vertex even when incidences coincide.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Normalizes each edge (sort, dedupe). Throws kInvalidArgument on an
  // out-of-range vertex.
  Hypergraph(int num_vertices, std::vector<VertexSet> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// n x m 0/1 matrix with entry (v, e) = 1 iff v is in edge e.
RationalMatrix IncidenceMatrix(const Hypergraph& h);

// Vertices are the edges of h; edge v (one per original vertex, in order) is
// the set of edges containing v.
Hypergraph Dual(const Hypergraph& h);

// Each edge e replaced by V \ e, order preserved.
Hypergraph Complement(const Hypergraph& h);

struct HypergraphFlags {
  bool has_isolated_vertex = false;
  bool has_universal_vertex = false;
  bool has_empty_edge = false;
  bool has_complete_edge = false;
  bool nontrivial = false;  // no empty edge and no universal vertex
};

HypergraphFlags Classify(const Hypergraph& h);

enum class ParamKind { kCovering, kPacking, kMatching, kTransversal };
std::string_view ParamName(ParamKind kind);

// The LP behind each fractional parameter, over the incidence matrix M:
//   Covering     min 1.x  s.t. M x   >= 1   (x per edge)
//   Packing      max 1.y  s.t. M^T y <= 1   (y per vertex)
//   Matching     max 1.y  s.t. M y   <= 1   (y per edge)
//   Transversal  min 1.x  s.t. M^T x >= 1   (x per vertex)
LinearProgram ParameterLp(const Hypergraph& h, ParamKind kind);

// Exact optimum of ParameterLp. Preconditions are checked before solving:
// an isolated vertex makes Covering kInfeasibleParameter and Packing
// kUnboundedParameter; an empty edge makes Transversal kInfeasibleParameter
// and Matching kUnboundedParameter.
Rational FractionalParam(const Hypergraph& h, ParamKind kind);

// As FractionalParam, but the two degenerate outcomes (infeasible min,
// unbounded max) are reported as nullopt, read as +infinity.
std::optional<Rational> ExtendedFractionalParam(const Hypergraph& h,
                                                ParamKind kind);

// Integer counterpart by brute force: Covering/Matching over edge subsets,
// Packing/Transversal over vertex subsets. Same preconditions as
// FractionalParam; kBudgetExceeded when 2^(n or m) exceeds the budget.
std::uint64_t IntegerParam(const Hypergraph& h, ParamKind kind,
                           const EnumerationBudget& budget = {});

// rho_H(S) = max_e |S cap e|; 0 for a hypergraph without edges.
int Rho(const Hypergraph& h, std::span<const int> vertices);
// rho~_H(Z) = min_v |{e in Z : v in e}| for a set Z of edge indices.
int RhoTilde(const Hypergraph& h, std::span<const int> edge_indices);

enum class RatioBoundKind { kAlpha, kBeta, kGamma };

// Literal subset-enumeration extrema:
//   Alpha  max |S| / rho(S)            over S in V with rho(S) > 0
//   Beta   min |Z| / rho~(Z)           over Z in E with rho~(Z) > 0
//   Gamma  min |T| / (|T| - rho(T))    over T in V with |T| > rho(T)
// Throws kNoAdmissibleSubset or kBudgetExceeded.
Rational RatioBound(const Hypergraph& h, RatioBoundKind kind,
                    const EnumerationBudget& budget = {});

// One identity 1/f(H*) + 1/f(complement H) = 1. A nullopt value means the
// parameter is +infinity (infeasible covering LP or unbounded packing LP) and
// contributes 0 to the sum.
struct ParameterIdentity {
  ParamKind kind;
  std::optional<Rational> dual_value;
  std::optional<Rational> complement_value;
  Rational lhs;
  bool holds = false;
  bool uses_infinity = false;
};

struct HypergraphComplementationReport {
  std::array<ParameterIdentity, 4> identities;  // Covering, Packing, Matching, Transversal
  bool all_hold = false;
};

// Requires h nontrivial (kNotNontrivial).
HypergraphComplementationReport VerifyHypergraphComplementation(
    const Hypergraph& h);

// p <= alpha <= p_f = k_f <= beta <= k.
struct ChainReport {
  std::uint64_t packing = 0;
  Rational alpha;
  Rational packing_f;
  Rational covering_f;
  Rational beta;
  std::uint64_t covering = 0;
  std::array<bool, 5> links{};  // one per relation, left to right
  bool holds = false;
};

// Requires no isolated vertex (kInfeasibleParameter).
ChainReport VerifyChain(const Hypergraph& h,
                        const EnumerationBudget& budget = {});

// 1/alpha(complement H) + 1/beta(H*) = 1 for nontrivial h.
struct AlphaBetaReport {
  Rational alpha_complement;
  Rational beta_dual;
  Rational lhs;
  bool holds = false;
};

AlphaBetaReport VerifyAlphaBeta(const Hypergraph& h,
                                const EnumerationBudget& budget = {});

// Format: "hypergraph <n>", then one edge per line as vertex indices, or "-"
// for the empty edge. Rejects n = 0 or m = 0.
Hypergraph ParseHypergraph(std::string_view text);
std::string FormatHypergraph(const Hypergraph& h);

}  // namespace fraccomp

#endif  // FRACCOMP_HYPERGRAPH_H_
