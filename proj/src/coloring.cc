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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <utility>

namespace fraccomp {
namespace {

using Mask = std::uint64_t;

Mask Bit(int v) { return Mask{1} << v; }

Mask AllVertices(int n) { return n == 64 ? ~Mask{0} : Bit(n) - 1; }

VertexSet ToSet(Mask m) {
  VertexSet s;
  while (m != 0) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

void RequireEdge(const Graph& g) {
  if (g.num_edges() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  }
}

// Complement adjacency: u and v distinct and not adjacent.
std::vector<Mask> NonAdjacency(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Mask> non(adj.size());
  for (int v = 0; v < n; ++v) {
    non[static_cast<size_t>(v)] =
        AllVertices(n) & ~adj[static_cast<size_t>(v)] & ~Bit(v);
  }
  return non;
}

// Maximal cliques of the graph given by `nbr`.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const std::vector<Mask>& nbr, BudgetMeter& meter)
      : nbr_(nbr), meter_(meter) {}

  void All(Mask r, Mask p, Mask x, std::vector<Mask>& out) {
    meter_.Tick();
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    const Mask candidates = p & ~nbr_[Pivot(p, x)];
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      All(r | Bit(v), p & nbr_[static_cast<size_t>(v)],
          x & nbr_[static_cast<size_t>(v)], out);
      p &= ~Bit(v);
      x |= Bit(v);
    }
  }

  void Max(int size, Mask p, int& best) {
    meter_.Tick();
    if (p == 0) {
      best = std::max(best, size);
      return;
    }
    while (p != 0) {
      if (size + std::popcount(p) <= best) return;
      const int v = std::countr_zero(p);
      Max(size + 1, p & nbr_[static_cast<size_t>(v)], best);
      p &= ~Bit(v);
    }
  }

 private:
  size_t Pivot(Mask p, Mask x) const {
    int best = -1;
    size_t pivot = 0;
    for (Mask m = p | x; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int score = std::popcount(p & nbr_[static_cast<size_t>(u)]);
      if (score > best) {
        best = score;
        pivot = static_cast<size_t>(u);
      }
    }
    return pivot;
  }

  const std::vector<Mask>& nbr_;
  BudgetMeter& meter_;
};

int MaxClique(const std::vector<Mask>& nbr, const EnumerationBudget& budget) {
  BudgetMeter meter(budget, "maximum clique search");
  CliqueEnumerator e(nbr, meter);
  int best = 0;
  e.Max(0, AllVertices(static_cast<int>(nbr.size())), best);
  return best;
}

class ColoringSearch {
 public:
  ColoringSearch(std::vector<Mask> adj, const EnumerationBudget& budget)
      : adj_(std::move(adj)),
        n_(static_cast<int>(adj_.size())),
        colors_(adj_.size(), -1),
        meter_(budget, "exact coloring") {}

  Coloring Run(int lower_bound) {
    lower_bound_ = lower_bound;
    Greedy();
    if (best_ > lower_bound_) {
      std::fill(colors_.begin(), colors_.end(), -1);
      classes_.clear();
      Search(0);
    }
    return Coloring{best_, best_colors_};
  }

 private:
  Mask NeighborColors(int v) const {
    Mask used = 0;
    for (size_t c = 0; c < classes_.size(); ++c) {
      if ((classes_[c] & adj_[static_cast<size_t>(v)]) != 0) used |= Bit(static_cast<int>(c));
    }
    return used;
  }

  // Uncolored vertex of maximum saturation, then maximum uncolored degree,
  // then smallest index.
  int Choose(Mask uncolored) const {
    int choice = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Mask m = uncolored; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int sat = std::popcount(NeighborColors(v));
      const int deg = std::popcount(adj_[static_cast<size_t>(v)] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        choice = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return choice;
  }

  Mask Uncolored() const {
    Mask m = 0;
    for (int v = 0; v < n_; ++v) {
      if (colors_[static_cast<size_t>(v)] < 0) m |= Bit(v);
    }
    return m;
  }

  void Assign(int v, int c) {
    if (static_cast<size_t>(c) == classes_.size()) classes_.push_back(0);
    classes_[static_cast<size_t>(c)] |= Bit(v);
    colors_[static_cast<size_t>(v)] = c;
  }

  void Unassign(int v, int c) {
    classes_[static_cast<size_t>(c)] &= ~Bit(v);
    colors_[static_cast<size_t>(v)] = -1;
    if (static_cast<size_t>(c) + 1 == classes_.size() && classes_.back() == 0) {
      classes_.pop_back();
    }
  }

  void Greedy() {
    for (int step = 0; step < n_; ++step) {
      const int v = Choose(Uncolored());
      const Mask used = NeighborColors(v);
      Assign(v, std::countr_one(used));
    }
    best_ = static_cast<int>(classes_.size());
    best_colors_ = colors_;
  }

  void Search(int colored) {
    meter_.Tick();
    const int used = static_cast<int>(classes_.size());
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      best_colors_ = colors_;
      return;
    }
    const int v = Choose(Uncolored());
    const Mask forbidden = NeighborColors(v);
    for (int c = 0; c <= used; ++c) {
      if (forbidden >> c & 1) continue;
      if (c == used && used + 1 >= best_) break;
      Assign(v, c);
      Search(colored + 1);
      Unassign(v, c);
      if (best_ <= lower_bound_) return;
    }
  }

  std::vector<Mask> adj_;
  int n_;
  std::vector<int> colors_;
  std::vector<Mask> classes_;
  BudgetMeter meter_;
  int lower_bound_ = 0;
  int best_ = 0;
  std::vector<int> best_colors_;
};

void KSubsets(int n, int r, int start, VertexSet& current,
              std::vector<VertexSet>& out) {
  if (static_cast<int>(current.size()) == r) {
    out.push_back(current);
    return;
  }
  for (int v = start; v < n; ++v) {
    current.push_back(v);
    KSubsets(n, r, v + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> MaximalIndependentSets(const Graph& g,
                                              const EnumerationBudget& budget) {
  const std::vector<Mask> non = NonAdjacency(AdjacencyMasks(g));
  BudgetMeter meter(budget, "maximal independent set enumeration");
  CliqueEnumerator e(non, meter);
  std::vector<Mask> found;
  e.All(0, AllVertices(g.num_vertices()), 0, found);
  std::vector<VertexSet> sets;
  sets.reserve(found.size());
  for (Mask m : found) sets.push_back(ToSet(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

Hypergraph IndependentSetHypergraph(const Graph& g,
                                    const EnumerationBudget& budget) {
  return Hypergraph(g.num_vertices(), MaximalIndependentSets(g, budget));
}

Hypergraph MinimalCoverHypergraph(const Graph& g,
                                  const EnumerationBudget& budget) {
  return Complement(IndependentSetHypergraph(g, budget));
}

Rational FractionalChromatic(const Graph& g, const EnumerationBudget& budget) {
  RequireEdge(g);
  return FractionalParam(IndependentSetHypergraph(g, budget),
                         ParamKind::kCovering);
}

KappaResult KappaF(const Graph& g, const EnumerationBudget& budget) {
  RequireEdge(g);
  const Hypergraph independent = IndependentSetHypergraph(g, budget);
  KappaResult result;
  result.kappa = FractionalParam(Complement(independent), ParamKind::kMatching);
  result.chi_f = FractionalParam(independent, ParamKind::kCovering);
  result.identity_holds =
      Reciprocal(result.kappa) + Reciprocal(result.chi_f) == Rational(1);
  return result;
}

int CliqueNumber(const Graph& g, const EnumerationBudget& budget) {
  return MaxClique(AdjacencyMasks(g), budget);
}

int IndependenceNumber(const Graph& g, const EnumerationBudget& budget) {
  return MaxClique(NonAdjacency(AdjacencyMasks(g)), budget);
}

Coloring OptimalColoring(const Graph& g, const EnumerationBudget& budget) {
  return OptimalColoring(g, 0, budget);
}

Coloring OptimalColoring(const Graph& g, int known_lower_bound,
                         const EnumerationBudget& budget) {
  std::vector<Mask> adj = AdjacencyMasks(g);
  if (g.num_vertices() == 0) return Coloring{};
  const int lower = std::max(known_lower_bound, MaxClique(adj, budget));
  ColoringSearch search(std::move(adj), budget);
  return search.Run(lower);
}

int ChromaticNumber(const Graph& g, const EnumerationBudget& budget) {
  return OptimalColoring(g, budget).num_colors;
}

Graph LexicographicProduct(const Graph& g, int c) {
  if (c < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "lexicographic product needs c >= 1");
  }
  const int n = g.num_vertices();
  std::vector<VertexPair> edges;
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < c; ++a) {
      for (int b = a + 1; b < c; ++b) edges.emplace_back(v * c + a, v * c + b);
    }
  }
  for (const auto& [u, v] : g.edges()) {
    for (int a = 0; a < c; ++a) {
      for (int b = 0; b < c; ++b) edges.emplace_back(u * c + a, v * c + b);
    }
  }
  return Graph(n * c, std::move(edges));
}

int CFoldChromatic(const Graph& g, int c, const EnumerationBudget& budget) {
  return ChromaticNumber(LexicographicProduct(g, c), budget);
}

KappaBoundsReport KappaBounds(const Graph& g, const EnumerationBudget& budget) {
  RequireEdge(g);
  KappaBoundsReport r;
  r.n = g.num_vertices();
  r.omega = CliqueNumber(g, budget);
  r.chi = ChromaticNumber(g, budget);
  r.alpha = IndependenceNumber(g, budget);
  r.kappa = KappaF(g, budget).kappa;
  r.chi_bound = Rational(r.chi, r.chi - 1);
  r.alpha_bound = Rational(r.n, r.n - r.alpha);
  r.omega_bound = Rational(r.omega, r.omega - 1);
  r.chi_bound_holds = r.chi_bound <= r.kappa;
  r.alpha_bound_holds = r.kappa <= r.alpha_bound;
  r.omega_bound_holds = r.kappa <= r.omega_bound;
  const double denominator = r.chi - 1 - std::log(static_cast<double>(r.alpha));
  if (denominator > 0) {
    r.log_bound = r.chi / denominator;
    r.log_bound_holds = r.kappa.ToDouble() <= *r.log_bound + 1e-9;
  }
  r.all_hold = r.chi_bound_holds && r.alpha_bound_holds &&
               r.omega_bound_holds && r.log_bound_holds;
  return r;
}

std::vector<VertexSet> KneserLabels(int n, int r) {
  if (r < 1 || n < 2 * r) {
    throw Error(ErrorCode::kInvalidArgument,
                "Kneser graph K(n, r) needs r >= 1 and n >= 2r");
  }
  std::vector<VertexSet> labels;
  VertexSet current;
  KSubsets(n, r, 0, current, labels);
  return labels;
}

Graph KneserGraph(int n, int r) {
  const std::vector<VertexSet> labels = KneserLabels(n, r);
  const int count = static_cast<int>(labels.size());
  std::vector<VertexPair> edges;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const VertexSet& a = labels[static_cast<size_t>(i)];
      const VertexSet& b = labels[static_cast<size_t>(j)];
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.empty()) edges.emplace_back(i, j);
    }
  }
  return Graph(count, std::move(edges));
}

}  // namespace fraccomp
