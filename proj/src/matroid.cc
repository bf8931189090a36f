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

#include "fraccomp/matroid.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace fraccomp {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n)), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) {
      parent_[static_cast<size_t>(v)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }

  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    --count_;
    return true;
  }

  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

std::vector<std::uint64_t> BasisMasks(const Matroid& m) {
  std::vector<std::uint64_t> masks;
  for (const VertexSet& b : m.bases()) {
    std::uint64_t mask = 0;
    for (int v : b) mask |= std::uint64_t{1} << v;
    masks.push_back(mask);
  }
  return masks;
}

int MaskRank(const std::vector<std::uint64_t>& bases, std::uint64_t s) {
  int best = 0;
  for (std::uint64_t b : bases) best = std::max(best, std::popcount(b & s));
  return best;
}

std::uint64_t FullMask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

class SpanningTrees {
 public:
  SpanningTrees(const Graph& g, const EnumerationBudget& budget)
      : g_(g), meter_(budget, "spanning tree enumeration") {}

  std::vector<VertexSet> Run() {
    VertexSet chosen;
    Recurse(0, chosen, DisjointSets(g_.num_vertices()));
    return std::move(trees_);
  }

 private:
  // The chosen edges plus edges i.. still connect the graph.
  bool CanSpan(size_t i, const VertexSet& chosen) const {
    DisjointSets d(g_.num_vertices());
    for (int e : chosen) {
      d.Union(g_.edges()[static_cast<size_t>(e)].first,
              g_.edges()[static_cast<size_t>(e)].second);
    }
    for (size_t e = i; e < g_.edges().size(); ++e) {
      d.Union(g_.edges()[e].first, g_.edges()[e].second);
    }
    return d.count() == 1;
  }

  void Recurse(size_t i, VertexSet& chosen, DisjointSets components) {
    meter_.Tick();
    if (components.count() == 1) {
      trees_.push_back(chosen);
      return;
    }
    if (i == g_.edges().size()) return;
    const auto [u, v] = g_.edges()[i];
    DisjointSets with = components;
    if (with.Union(u, v)) {
      chosen.push_back(static_cast<int>(i));
      Recurse(i + 1, chosen, with);
      chosen.pop_back();
    }
    if (CanSpan(i + 1, chosen)) Recurse(i + 1, chosen, std::move(components));
  }

  const Graph& g_;
  BudgetMeter meter_;
  std::vector<VertexSet> trees_;
};

}  // namespace

Matroid FromBases(const Hypergraph& h, bool validate) {
  if (h.num_edges() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "a matroid needs at least one basis");
  }
  Matroid m;
  m.n_ = h.num_vertices();
  m.bases_ = h.edges();
  std::sort(m.bases_.begin(), m.bases_.end());
  m.bases_.erase(std::unique(m.bases_.begin(), m.bases_.end()), m.bases_.end());
  m.rank_ = static_cast<int>(m.bases_.front().size());
  for (const VertexSet& b : m.bases_) {
    if (static_cast<int>(b.size()) != m.rank_) {
      throw Error(ErrorCode::kUnequalBasisSizes, "bases differ in size");
    }
  }
  if (validate) {
    const std::set<VertexSet> lookup(m.bases_.begin(), m.bases_.end());
    for (const VertexSet& b1 : m.bases_) {
      for (const VertexSet& b2 : m.bases_) {
        VertexSet only1;
        VertexSet only2;
        std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                            std::back_inserter(only1));
        std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                            std::back_inserter(only2));
        for (int x : only1) {
          bool exchanged = false;
          for (int y : only2) {
            VertexSet swapped = b1;
            swapped.erase(std::find(swapped.begin(), swapped.end(), x));
            swapped.insert(std::lower_bound(swapped.begin(), swapped.end(), y), y);
            if (lookup.contains(swapped)) {
              exchanged = true;
              break;
            }
          }
          if (!exchanged) {
            throw Error(ErrorCode::kExchangeAxiomViolated,
                        "no exchange for element " + std::to_string(x));
          }
        }
      }
    }
  }
  return m;
}

Hypergraph BasisHypergraph(const Matroid& m) {
  return Hypergraph(m.ground_size(), m.bases());
}

int Rank(const Matroid& m, std::span<const int> s) {
  std::vector<bool> in(static_cast<size_t>(m.ground_size()), false);
  for (int v : s) {
    if (v < 0 || v >= m.ground_size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element " + std::to_string(v) + " outside the ground set");
    }
    in[static_cast<size_t>(v)] = true;
  }
  int best = 0;
  for (const VertexSet& b : m.bases()) {
    int overlap = 0;
    for (int v : b) overlap += in[static_cast<size_t>(v)] ? 1 : 0;
    best = std::max(best, overlap);
  }
  return best;
}

Matroid Dual(const Matroid& m) {
  return FromBases(Complement(BasisHypergraph(m)), false);
}

std::vector<int> Coloops(const Matroid& m) {
  std::vector<int> count(static_cast<size_t>(m.ground_size()), 0);
  for (const VertexSet& b : m.bases()) {
    for (int v : b) ++count[static_cast<size_t>(v)];
  }
  std::vector<int> out;
  for (int v = 0; v < m.ground_size(); ++v) {
    if (count[static_cast<size_t>(v)] == static_cast<int>(m.bases().size())) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> Loops(const Matroid& m) {
  std::vector<bool> used(static_cast<size_t>(m.ground_size()), false);
  for (const VertexSet& b : m.bases()) {
    for (int v : b) used[static_cast<size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < m.ground_size(); ++v) {
    if (!used[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

Rational EdgeToughness(const Matroid& m, const EnumerationBudget& budget) {
  if (m.rank() == 0) throw Error(ErrorCode::kRankZero, "matroid has rank 0");
  const int n = m.ground_size();
  budget.RequireSubsets(n, "edge toughness enumeration");
  const std::vector<std::uint64_t> bases = BasisMasks(m);
  std::optional<Rational> best;
  for (std::uint64_t s = 0; s <= FullMask(n); ++s) {
    const int deficit = m.rank() - MaskRank(bases, s);
    if (deficit <= 0) continue;
    const Rational value(n - std::popcount(s), deficit);
    if (!best || value < *best) best = value;
  }
  return *best;
}

Matroid CycleMatroid(const Graph& g, const EnumerationBudget& budget) {
  if (g.num_edges() == 0 || !IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected,
                "cycle matroids need a connected graph with an edge");
  }
  std::vector<VertexSet> trees = SpanningTrees(g, budget).Run();
  return FromBases(Hypergraph(g.num_edges(), std::move(trees)), false);
}

Rational EdgeToughness(const Graph& g, const EnumerationBudget& budget) {
  const int m = g.num_edges();
  if (m == 0) throw Error(ErrorCode::kNoEdges, "graph has no edges");
  budget.RequireSubsets(m, "edge toughness enumeration");
  std::optional<Rational> best;
  for (std::uint64_t z = 0; z <= FullMask(m); ++z) {
    DisjointSets d(g.num_vertices());
    for (int e = 0; e < m; ++e) {
      if (!(z >> e & 1)) {
        d.Union(g.edges()[static_cast<size_t>(e)].first,
                g.edges()[static_cast<size_t>(e)].second);
      }
    }
    if (d.count() <= 1) continue;
    const Rational value(std::popcount(z), d.count() - 1);
    if (!best || value < *best) best = value;
  }
  return *best;
}

bool DualRankFormulaHolds(const Matroid& m, const EnumerationBudget& budget) {
  const int n = m.ground_size();
  budget.RequireSubsets(n, "dual rank check");
  const std::vector<std::uint64_t> bases = BasisMasks(m);
  const std::vector<std::uint64_t> dual_bases = BasisMasks(Dual(m));
  const std::uint64_t all = FullMask(n);
  for (std::uint64_t t = 0; t <= all; ++t) {
    if (MaskRank(dual_bases, t) !=
        std::popcount(t) - m.rank() + MaskRank(bases, all & ~t)) {
      return false;
    }
  }
  return true;
}

MatroidTheoremReport VerifyMatroidTheorem(const Matroid& m,
                                          const EnumerationBudget& budget) {
  if (m.rank() == 0) {
    throw Error(ErrorCode::kTrivialMatroid, "matroid has rank 0");
  }
  if (const std::vector<int> coloops = Coloops(m); !coloops.empty()) {
    throw Error(ErrorCode::kTrivialMatroid,
                "element " + std::to_string(coloops.front()) + " is a coloop");
  }
  const Hypergraph h = BasisHypergraph(m);
  MatroidTheoremReport r;
  r.matching_f = FractionalParam(h, ParamKind::kMatching);
  r.transversal_f = FractionalParam(h, ParamKind::kTransversal);
  r.toughness = EdgeToughness(m, budget);
  r.coincide = r.matching_f == r.transversal_f && r.transversal_f == r.toughness;

  if (Loops(m).empty()) {
    r.covering_f = FractionalParam(h, ParamKind::kCovering);
    r.alpha = RatioBound(h, RatioBoundKind::kAlpha, budget);
    r.covering_equals_alpha = *r.covering_f == *r.alpha;
  }
  r.beta_dual = RatioBound(Dual(h), RatioBoundKind::kBeta, budget);
  r.toughness_equals_beta = r.toughness == r.beta_dual;
  r.all_hold = r.coincide && r.toughness_equals_beta &&
               r.covering_equals_alpha.value_or(true);
  return r;
}

}  // namespace fraccomp
