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

#include "fraccomp/hypergraph.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fraccomp/text_reader.h"

namespace fraccomp {
namespace {

using Mask = std::uint64_t;

Mask Bit(int i) { return Mask{1} << i; }

int Popcount(Mask m) { return std::popcount(m); }

// Edge masks over vertices. Callers have already bounded n via the budget.
std::vector<Mask> EdgeMasks(const Hypergraph& h) {
  std::vector<Mask> out;
  out.reserve(h.edges().size());
  for (const VertexSet& e : h.edges()) {
    Mask m = 0;
    for (int v : e) m |= Bit(v);
    out.push_back(m);
  }
  return out;
}

// For each vertex, the mask of edges containing it.
std::vector<Mask> VertexIncidenceMasks(const Hypergraph& h) {
  std::vector<Mask> out(static_cast<size_t>(h.num_vertices()), 0);
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int v : h.edge(e)) out[static_cast<size_t>(v)] |= Bit(e);
  }
  return out;
}

int RhoMask(const std::vector<Mask>& edge_masks, Mask s) {
  int best = 0;
  for (Mask e : edge_masks) best = std::max(best, Popcount(s & e));
  return best;
}

int RhoTildeMask(const std::vector<Mask>& incidence, Mask z) {
  int best = std::numeric_limits<int>::max();
  for (Mask inc : incidence) best = std::min(best, Popcount(z & inc));
  return incidence.empty() ? 0 : best;
}

Mask FullMask(int bits) { return bits == 0 ? 0 : (~Mask{0} >> (64 - bits)); }

void CheckPreconditions(const Hypergraph& h, ParamKind kind) {
  const HypergraphFlags flags = Classify(h);
  switch (kind) {
    case ParamKind::kCovering:
      if (flags.has_isolated_vertex) {
        throw Error(ErrorCode::kInfeasibleParameter,
                    "covering LP is infeasible: hypergraph has an isolated "
                    "vertex");
      }
      break;
    case ParamKind::kPacking:
      if (flags.has_isolated_vertex) {
        throw Error(ErrorCode::kUnboundedParameter,
                    "packing LP is unbounded: hypergraph has an isolated "
                    "vertex");
      }
      break;
    case ParamKind::kMatching:
      if (flags.has_empty_edge) {
        throw Error(ErrorCode::kUnboundedParameter,
                    "matching LP is unbounded: hypergraph has an empty edge");
      }
      break;
    case ParamKind::kTransversal:
      if (flags.has_empty_edge) {
        throw Error(ErrorCode::kInfeasibleParameter,
                    "transversal LP is infeasible: hypergraph has an empty "
                    "edge");
      }
      break;
  }
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<VertexSet> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  for (VertexSet& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (!e.empty() && (e.front() < 0 || e.back() >= n_)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge vertex out of range for " + std::to_string(n_) +
                      " vertices");
    }
  }
}

RationalMatrix IncidenceMatrix(const Hypergraph& h) {
  RationalMatrix m(static_cast<size_t>(h.num_vertices()),
                   static_cast<size_t>(h.num_edges()));
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int v : h.edge(e)) {
      m(static_cast<size_t>(v), static_cast<size_t>(e)) = 1;
    }
  }
  return m;
}

Hypergraph Dual(const Hypergraph& h) {
  std::vector<VertexSet> edges(static_cast<size_t>(h.num_vertices()));
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int v : h.edge(e)) edges[static_cast<size_t>(v)].push_back(e);
  }
  return Hypergraph(h.num_edges(), std::move(edges));
}

Hypergraph Complement(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  edges.reserve(h.edges().size());
  for (const VertexSet& e : h.edges()) {
    VertexSet c;
    size_t k = 0;
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (k < e.size() && e[k] == v) {
        ++k;
      } else {
        c.push_back(v);
      }
    }
    edges.push_back(std::move(c));
  }
  return Hypergraph(h.num_vertices(), std::move(edges));
}

HypergraphFlags Classify(const Hypergraph& h) {
  HypergraphFlags flags;
  std::vector<int> degree(static_cast<size_t>(h.num_vertices()), 0);
  for (const VertexSet& e : h.edges()) {
    if (e.empty()) flags.has_empty_edge = true;
    if (static_cast<int>(e.size()) == h.num_vertices()) {
      flags.has_complete_edge = true;
    }
    for (int v : e) ++degree[static_cast<size_t>(v)];
  }
  for (int d : degree) {
    if (d == 0) flags.has_isolated_vertex = true;
    if (d == h.num_edges()) flags.has_universal_vertex = true;
  }
  flags.nontrivial = !flags.has_empty_edge && !flags.has_universal_vertex;
  return flags;
}

std::string_view ParamName(ParamKind kind) {
  switch (kind) {
    case ParamKind::kCovering: return "covering";
    case ParamKind::kPacking: return "packing";
    case ParamKind::kMatching: return "matching";
    case ParamKind::kTransversal: return "transversal";
  }
  return "unknown";
}

LinearProgram ParameterLp(const Hypergraph& h, ParamKind kind) {
  const RationalMatrix m = IncidenceMatrix(h);
  LinearProgram lp;
  const bool transposed =
      kind == ParamKind::kPacking || kind == ParamKind::kTransversal;
  lp.matrix = transposed ? m.Transpose() : m;
  lp.sense = (kind == ParamKind::kCovering || kind == ParamKind::kTransversal)
                 ? Sense::kMinimize
                 : Sense::kMaximize;
  lp.objective.assign(lp.matrix.cols(), Rational(1));
  lp.rhs.assign(lp.matrix.rows(), Rational(1));
  return lp;
}

Rational FractionalParam(const Hypergraph& h, ParamKind kind) {
  CheckPreconditions(h, kind);
  const LpOutcome outcome = Solve(ParameterLp(h, kind));
  const auto* opt = std::get_if<Optimal>(&outcome);
  if (opt == nullptr) {
    throw std::logic_error(std::string(ParamName(kind)) +
                           " LP passed its precondition but is " +
                           std::string(OutcomeName(outcome)));
  }
  return opt->value;
}

std::optional<Rational> ExtendedFractionalParam(const Hypergraph& h,
                                                ParamKind kind) {
  try {
    return FractionalParam(h, kind);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasibleParameter ||
        e.code() == ErrorCode::kUnboundedParameter) {
      return std::nullopt;
    }
    throw;
  }
}

std::uint64_t IntegerParam(const Hypergraph& h, ParamKind kind,
                           const EnumerationBudget& budget) {
  CheckPreconditions(h, kind);
  const int n = h.num_vertices();
  const int m = h.num_edges();
  const bool over_edges =
      kind == ParamKind::kCovering || kind == ParamKind::kMatching;
  budget.RequireSubsets(over_edges ? m : n,
                        "integer " + std::string(ParamName(kind)));

  switch (kind) {
    case ParamKind::kCovering: {
      const std::vector<Mask> edges = EdgeMasks(h);
      const Mask all = FullMask(n);
      int best = m;  // the full edge set covers when nothing is isolated
      for (Mask f = 0; f <= FullMask(m); ++f) {
        if (Popcount(f) >= best) continue;
        Mask covered = 0;
        for (int e = 0; e < m; ++e) {
          if (f & Bit(e)) covered |= edges[static_cast<size_t>(e)];
        }
        if (covered == all) best = Popcount(f);
        if (f == FullMask(m)) break;
      }
      return static_cast<std::uint64_t>(best);
    }
    case ParamKind::kMatching: {
      const std::vector<Mask> edges = EdgeMasks(h);
      int best = 0;
      for (Mask f = 0;; ++f) {
        if (Popcount(f) > best) {
          Mask used = 0;
          bool disjoint = true;
          for (int e = 0; e < m && disjoint; ++e) {
            if (!(f & Bit(e))) continue;
            disjoint = (used & edges[static_cast<size_t>(e)]) == 0;
            used |= edges[static_cast<size_t>(e)];
          }
          if (disjoint) best = Popcount(f);
        }
        if (f == FullMask(m)) break;
      }
      return static_cast<std::uint64_t>(best);
    }
    case ParamKind::kPacking: {
      const std::vector<Mask> edges = EdgeMasks(h);
      int best = 0;
      for (Mask s = 0;; ++s) {
        if (Popcount(s) > best && RhoMask(edges, s) <= 1) best = Popcount(s);
        if (s == FullMask(n)) break;
      }
      return static_cast<std::uint64_t>(best);
    }
    case ParamKind::kTransversal: {
      const std::vector<Mask> edges = EdgeMasks(h);
      int best = n;
      for (Mask s = 0;; ++s) {
        if (Popcount(s) < best) {
          bool hits = true;
          for (Mask e : edges) hits &= (s & e) != 0;
          if (hits) best = Popcount(s);
        }
        if (s == FullMask(n)) break;
      }
      return static_cast<std::uint64_t>(best);
    }
  }
  return 0;
}

int Rho(const Hypergraph& h, std::span<const int> vertices) {
  int best = 0;
  for (const VertexSet& e : h.edges()) {
    int count = 0;
    for (int v : vertices) {
      count += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    }
    best = std::max(best, count);
  }
  return best;
}

int RhoTilde(const Hypergraph& h, std::span<const int> edge_indices) {
  if (h.num_vertices() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < h.num_vertices(); ++v) {
    int count = 0;
    for (int e : edge_indices) {
      const VertexSet& edge = h.edge(e);
      count += std::binary_search(edge.begin(), edge.end(), v) ? 1 : 0;
    }
    best = std::min(best, count);
  }
  return best;
}

Rational RatioBound(const Hypergraph& h, RatioBoundKind kind,
                    const EnumerationBudget& budget) {
  std::optional<Rational> best;
  auto offer = [&](Rational value, bool maximize) {
    if (!best || (maximize ? value > *best : value < *best)) {
      best = std::move(value);
    }
  };

  if (kind == RatioBoundKind::kBeta) {
    budget.RequireSubsets(h.num_edges(), "beta bound");
    const std::vector<Mask> incidence = VertexIncidenceMasks(h);
    if (!incidence.empty()) {
      for (Mask z = 1; z != 0 && z <= FullMask(h.num_edges()); ++z) {
        const int r = RhoTildeMask(incidence, z);
        if (r > 0) offer(Rational(Popcount(z), r), false);
      }
    }
  } else {
    budget.RequireSubsets(h.num_vertices(),
                          kind == RatioBoundKind::kAlpha ? "alpha bound"
                                                         : "gamma bound");
    const std::vector<Mask> edges = EdgeMasks(h);
    for (Mask s = 1; s != 0 && s <= FullMask(h.num_vertices()); ++s) {
      const int size = Popcount(s);
      const int r = RhoMask(edges, s);
      if (kind == RatioBoundKind::kAlpha) {
        if (r > 0) offer(Rational(size, r), true);
      } else if (size > r) {
        offer(Rational(size, size - r), false);
      }
    }
  }
  if (!best) {
    throw Error(ErrorCode::kNoAdmissibleSubset,
                "no subset satisfies the ratio bound's admissibility "
                "condition");
  }
  return *best;
}

HypergraphComplementationReport VerifyHypergraphComplementation(
    const Hypergraph& h) {
  if (!Classify(h).nontrivial) {
    throw Error(ErrorCode::kNotNontrivial,
                "hypergraph has an empty edge or a universal vertex");
  }
  const Hypergraph dual = Dual(h);
  const Hypergraph comp = Complement(h);
  HypergraphComplementationReport report;
  report.all_hold = true;
  const std::array<ParamKind, 4> kinds = {
      ParamKind::kCovering, ParamKind::kPacking, ParamKind::kMatching,
      ParamKind::kTransversal};
  for (size_t i = 0; i < kinds.size(); ++i) {
    ParameterIdentity& id = report.identities[i];
    id.kind = kinds[i];
    id.dual_value = ExtendedFractionalParam(dual, kinds[i]);
    id.complement_value = ExtendedFractionalParam(comp, kinds[i]);
    id.uses_infinity = !id.dual_value || !id.complement_value;
    if (id.dual_value) id.lhs += Reciprocal(*id.dual_value);
    if (id.complement_value) id.lhs += Reciprocal(*id.complement_value);
    id.holds = id.lhs == Rational(1);
    report.all_hold &= id.holds;
  }
  return report;
}

ChainReport VerifyChain(const Hypergraph& h, const EnumerationBudget& budget) {
  if (Classify(h).has_isolated_vertex) {
    throw Error(ErrorCode::kInfeasibleParameter,
                "parameter chain needs a hypergraph without isolated "
                "vertices");
  }
  ChainReport r;
  r.packing = IntegerParam(h, ParamKind::kPacking, budget);
  r.alpha = RatioBound(h, RatioBoundKind::kAlpha, budget);
  r.packing_f = FractionalParam(h, ParamKind::kPacking);
  r.covering_f = FractionalParam(h, ParamKind::kCovering);
  r.beta = RatioBound(h, RatioBoundKind::kBeta, budget);
  r.covering = IntegerParam(h, ParamKind::kCovering, budget);
  const Rational p(static_cast<long>(r.packing));
  const Rational k(static_cast<long>(r.covering));
  r.links = {p <= r.alpha, r.alpha <= r.packing_f, r.packing_f == r.covering_f,
             r.covering_f <= r.beta, r.beta <= k};
  r.holds = std::all_of(r.links.begin(), r.links.end(), [](bool b) { return b; });
  return r;
}

AlphaBetaReport VerifyAlphaBeta(const Hypergraph& h,
                                const EnumerationBudget& budget) {
  if (!Classify(h).nontrivial) {
    throw Error(ErrorCode::kNotNontrivial,
                "hypergraph has an empty edge or a universal vertex");
  }
  AlphaBetaReport r;
  r.alpha_complement = RatioBound(Complement(h), RatioBoundKind::kAlpha, budget);
  r.beta_dual = RatioBound(Dual(h), RatioBoundKind::kBeta, budget);
  r.lhs = Reciprocal(r.alpha_complement) + Reciprocal(r.beta_dual);
  r.holds = r.lhs == Rational(1);
  return r;
}

Hypergraph ParseHypergraph(std::string_view text) {
  TextReader reader(text, "hypergraph");
  const std::vector<std::string> header = reader.NextTokens();
  if (header.size() != 2 || header[0] != "hypergraph") {
    reader.Fail("expected header 'hypergraph <n>'");
  }
  const size_t n = reader.ParseCount(header[1]);
  if (n == 0) reader.Fail("hypergraph needs at least one vertex");
  if (n > static_cast<size_t>(std::numeric_limits<int>::max())) {
    reader.Fail("vertex count too large");
  }
  std::vector<VertexSet> edges;
  while (auto tokens = reader.TryNextTokens()) {
    VertexSet edge;
    if (!(tokens->size() == 1 && (*tokens)[0] == "-")) {
      for (const std::string& tok : *tokens) {
        const size_t v = reader.ParseCount(tok);
        if (v >= n) reader.Fail("vertex " + tok + " out of range");
        edge.push_back(static_cast<int>(v));
      }
      std::sort(edge.begin(), edge.end());
      if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
        reader.Fail("repeated vertex within an edge");
      }
    }
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) reader.Fail("hypergraph needs at least one edge");
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

std::string FormatHypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.num_vertices() << '\n';
  for (const VertexSet& e : h.edges()) {
    if (e.empty()) {
      out << "-\n";
      continue;
    }
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace fraccomp
