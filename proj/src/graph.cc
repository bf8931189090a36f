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

#include "fraccomp/graph.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fraccomp/error.h"
#include "fraccomp/text_reader.h"

namespace fraccomp {
namespace {

void CheckPair(int n, const VertexPair& p, std::string_view what) {
  if (p.first < 0 || p.second < 0 || p.first >= n || p.second >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " endpoint out of range");
  }
  if (p.first == p.second) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is a loop");
  }
}

std::vector<char> Adjacency(int n, const std::vector<VertexPair>& pairs,
                            bool symmetric) {
  std::vector<char> adj(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (const auto& [u, v] : pairs) {
    adj[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] = 1;
    if (symmetric) {
      adj[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] = 1;
    }
  }
  return adj;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<VertexPair> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  for (auto& e : edges_) {
    CheckPair(n_, e, "edge");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_ = Adjacency(n_, edges_, true);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

Digraph::Digraph(int num_vertices, std::vector<VertexPair> arcs)
    : n_(num_vertices), arcs_(std::move(arcs)) {
  if (n_ < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  for (const auto& a : arcs_) CheckPair(n_, a, "arc");
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  adjacency_ = Adjacency(n_, arcs_, false);
}

Digraph ToSymmetricDigraph(const Graph& g) {
  std::vector<VertexPair> arcs;
  for (const auto& [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.num_vertices(), std::move(arcs));
}

bool IsConnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!seen[static_cast<size_t>(v)] && g.adjacent(u, v)) {
        seen[static_cast<size_t>(v)] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

bool IsBipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<size_t>(s)] >= 0) continue;
    side[static_cast<size_t>(s)] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (side[static_cast<size_t>(v)] < 0) {
          side[static_cast<size_t>(v)] = 1 - side[static_cast<size_t>(u)];
          stack.push_back(v);
        } else if (side[static_cast<size_t>(v)] == side[static_cast<size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> AdjacencyMasks(const Graph& g) {
  if (g.num_vertices() > 64) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exact enumeration supports at most 64 vertices");
  }
  std::vector<std::uint64_t> masks(static_cast<size_t>(g.num_vertices()), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    masks[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }
  return masks;
}

GraphFile ParseGraphFile(std::string_view text) {
  // DIMACS files use 'c' comment lines and a 'p' problem line.
  bool dimacs = false;
  {
    TextReader probe(text, "graph");
    while (auto tokens = probe.TryNextTokens()) {
      if ((*tokens)[0] == "c") continue;
      dimacs = (*tokens)[0] == "p";
      break;
    }
  }

  TextReader reader(text, dimacs ? "dimacs" : "graph");
  if (dimacs) {
    size_t n = 0;
    bool have_header = false;
    std::vector<VertexPair> edges;
    while (auto tokens = reader.TryNextTokens()) {
      const std::string& kind = (*tokens)[0];
      if (kind == "c") continue;
      if (kind == "p") {
        if (have_header || tokens->size() != 4 ||
            ((*tokens)[1] != "edge" && (*tokens)[1] != "col")) {
          reader.Fail("expected 'p edge <n> <m>'");
        }
        n = reader.ParseCount((*tokens)[2]);
        have_header = true;
      } else if (kind == "e") {
        if (!have_header || tokens->size() != 3) reader.Fail("bad edge line");
        const size_t u = reader.ParseCount((*tokens)[1]);
        const size_t v = reader.ParseCount((*tokens)[2]);
        if (u < 1 || v < 1 || u > n || v > n || u == v) {
          reader.Fail("edge endpoint out of range or loop");
        }
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      } else {
        reader.Fail("unknown DIMACS line '" + kind + "'");
      }
    }
    if (n == 0 || n > static_cast<size_t>(std::numeric_limits<int>::max())) {
      reader.Fail("vertex count out of range");
    }
    return Graph(static_cast<int>(n), std::move(edges));
  }

  const std::vector<std::string> header = reader.NextTokens();
  if (header.size() != 2 || (header[0] != "graph" && header[0] != "digraph")) {
    reader.Fail("expected header 'graph <n>' or 'digraph <n>'");
  }
  const size_t n = reader.ParseCount(header[1]);
  if (n == 0 || n > static_cast<size_t>(std::numeric_limits<int>::max())) {
    reader.Fail("vertex count out of range");
  }
  std::vector<VertexPair> pairs;
  while (auto tokens = reader.TryNextTokens()) {
    if (tokens->size() != 2) reader.Fail("expected 'u v'");
    const size_t u = reader.ParseCount((*tokens)[0]);
    const size_t v = reader.ParseCount((*tokens)[1]);
    if (u >= n || v >= n) reader.Fail("endpoint out of range");
    if (u == v) reader.Fail("loops are not allowed");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (header[0] == "digraph") {
    return Digraph(static_cast<int>(n), std::move(pairs));
  }
  return Graph(static_cast<int>(n), std::move(pairs));
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace fraccomp
