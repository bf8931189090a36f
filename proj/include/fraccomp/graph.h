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

#ifndef FRACCOMP_GRAPH_H_
#define FRACCOMP_GRAPH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fraccomp {

using VertexPair = std::pair<int, int>;

// Simple loopless undirected graph. Edges are stored as sorted (u < v) pairs.
class Graph {
 public:
  Graph() = default;
  // Duplicate and reversed pairs collapse. Throws kInvalidArgument on loops or
  // out-of-range endpoints.
  Graph(int num_vertices, std::vector<VertexPair> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexPair>& edges() const { return edges_; }
  bool adjacent(int u, int v) const {
    return adjacency_[static_cast<size_t>(u) * static_cast<size_t>(n_) +
                      static_cast<size_t>(v)] != 0;
  }
  int degree(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<char> adjacency_;
};

// Loopless digraph; arcs (u, v) stored sorted and deduplicated.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int num_vertices, std::vector<VertexPair> arcs);

  int num_vertices() const { return n_; }
  const std::vector<VertexPair>& arcs() const { return arcs_; }
  bool has_arc(int u, int v) const {
    return adjacency_[static_cast<size_t>(u) * static_cast<size_t>(n_) +
                      static_cast<size_t>(v)] != 0;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> arcs_;
  std::vector<char> adjacency_;
};

// Each edge becomes two opposite arcs.
Digraph ToSymmetricDigraph(const Graph& g);

bool IsConnected(const Graph& g);
bool IsBipartite(const Graph& g);

// Bitmask adjacency for the exact-enumeration algorithms. Throws
// kBudgetExceeded above 64 vertices.
std::vector<std::uint64_t> AdjacencyMasks(const Graph& g);

using GraphFile = std::variant<Graph, Digraph>;

// "graph <n>" or "digraph <n>" then one "u v" line per edge/arc, 0-indexed.
// DIMACS ("p edge <n> <m>" and 1-indexed "e u v" lines, 'c' comments) is read
// as an undirected graph. Throws Error(kParse).
GraphFile ParseGraphFile(std::string_view text);
std::string FormatGraph(const Graph& g);

}  // namespace fraccomp

#endif  // FRACCOMP_GRAPH_H_
