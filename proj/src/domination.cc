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

#include "fraccomp/domination.h"

#include <utility>
#include <vector>

#include "fraccomp/error.h"

namespace fraccomp {

std::string SpecName(NeighborhoodSpec spec) {
  std::string name = spec.side == NeighborSide::kIn ? "in-" : "out-";
  name += spec.closure == Closure::kOpen ? "open" : "closed";
  return name;
}

NeighborhoodSpec ParseSpec(std::string_view text) {
  for (NeighborSide side : {NeighborSide::kIn, NeighborSide::kOut}) {
    for (Closure closure : {Closure::kOpen, Closure::kClosed}) {
      const NeighborhoodSpec spec{side, closure};
      if (SpecName(spec) == text) return spec;
    }
  }
  throw Error(ErrorCode::kParse,
              "unknown neighborhood spec '" + std::string(text) + "'");
}

Hypergraph NeighborhoodHypergraph(const Digraph& d, NeighborhoodSpec spec) {
  const int n = d.num_vertices();
  std::vector<VertexSet> edges(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    VertexSet& e = edges[static_cast<size_t>(v)];
    for (int u = 0; u < n; ++u) {
      const bool arc =
          spec.side == NeighborSide::kIn ? d.has_arc(u, v) : d.has_arc(v, u);
      if (arc || (u == v && spec.closure == Closure::kClosed)) e.push_back(u);
    }
  }
  return Hypergraph(n, std::move(edges));
}

Digraph Complement(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, std::move(arcs));
}

Rational FractionalDomination(const Digraph& d, NeighborhoodSpec spec) {
  const Hypergraph h = NeighborhoodHypergraph(d, spec);
  for (int v = 0; v < h.num_edges(); ++v) {
    if (h.edge(v).empty()) {
      throw Error(ErrorCode::kNoTotalDominatingSet,
                  "vertex " + std::to_string(v) + " has an empty " +
                      SpecName(spec) + " neighborhood");
    }
  }
  return FractionalParam(h, ParamKind::kTransversal);
}

bool IsTournament(const Digraph& d) {
  const int n = d.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    }
  }
  return true;
}

std::optional<int> RegularDegree(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> in(static_cast<size_t>(n), 0);
  std::vector<int> out(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : d.arcs()) {
    ++out[static_cast<size_t>(u)];
    ++in[static_cast<size_t>(v)];
  }
  if (n == 0) return std::nullopt;
  const int k = in[0];
  for (int v = 0; v < n; ++v) {
    if (in[static_cast<size_t>(v)] != k || out[static_cast<size_t>(v)] != k) {
      return std::nullopt;
    }
  }
  return k;
}

DominationReport VerifyDomination(const Digraph& d) {
  const int n = d.num_vertices();
  for (int v = 0; v < n; ++v) {
    bool universal = true;
    for (int u = 0; u < n && universal; ++u) {
      universal = u == v || d.has_arc(v, u);
    }
    if (universal) {
      throw Error(ErrorCode::kInUniversalVertex,
                  "vertex " + std::to_string(v) + " is in-universal");
    }
  }

  DominationReport report;
  report.gamma_in =
      FractionalDomination(d, {NeighborSide::kIn, Closure::kClosed});
  report.upper_out_complement = FractionalDomination(
      Complement(d), {NeighborSide::kOut, Closure::kOpen});
  report.lhs = Reciprocal(report.gamma_in) +
               Reciprocal(report.upper_out_complement);
  report.identity_holds = report.lhs == Rational(1);
  report.all_hold = report.identity_holds;

  report.is_tournament = IsTournament(d);
  if (report.is_tournament) {
    report.upper_in =
        FractionalDomination(d, {NeighborSide::kIn, Closure::kOpen});
    report.tournament_holds =
        Reciprocal(report.gamma_in) + Reciprocal(*report.upper_in) ==
        Rational(1);
    report.all_hold = report.all_hold && *report.tournament_holds;
  }

  report.regular_degree = RegularDegree(d);
  if (report.regular_degree && *report.regular_degree >= 1) {
    const int k = *report.regular_degree;
    report.upper_out =
        FractionalDomination(d, {NeighborSide::kOut, Closure::kOpen});
    report.regular_holds = report.gamma_in == Rational(n, k + 1) &&
                           *report.upper_out == Rational(n, k);
    report.all_hold = report.all_hold && *report.regular_holds;
  }
  return report;
}

}  // namespace fraccomp
