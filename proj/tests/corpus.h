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

// Seeded instance generators and named fixtures shared by the test binaries.

#ifndef FRACCOMP_TESTS_CORPUS_H_
#define FRACCOMP_TESTS_CORPUS_H_

#include <random>
#include <utility>
#include <vector>

#include "fraccomp/graph.h"
#include "fraccomp/hypergraph.h"

namespace fraccomp::testing {

inline Hypergraph Triangle() { return Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline Hypergraph C5Edges() {
  return Hypergraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

// n in [1, max_n], m in [1, max_m], each incidence present with
// probability 1/2.
inline Hypergraph RandomHypergraph(std::mt19937_64& rng, int max_n,
                                   int max_m) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  std::uniform_int_distribution<int> m_dist(1, max_m);
  std::bernoulli_distribution coin(0.5);
  const int n = n_dist(rng);
  const int m = m_dist(rng);
  std::vector<VertexSet> edges(static_cast<size_t>(m));
  for (auto& e : edges) {
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) e.push_back(v);
    }
  }
  return Hypergraph(n, std::move(edges));
}

inline std::vector<Hypergraph> HypergraphCorpus(int count, int max_n,
                                                int max_m,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(RandomHypergraph(rng, max_n, max_m));
  }
  return out;
}

inline Graph Cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph Path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph Complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
inline Graph Petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

inline Graph RandomGraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline Digraph RandomDigraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && coin(rng)) arcs.emplace_back(i, j);
    }
  }
  return Digraph(n, arcs);
}

// Every labelled graph on n vertices, by edge bitmask over the C(n,2) pairs.
inline std::vector<Graph> AllGraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace fraccomp::testing

#endif  // FRACCOMP_TESTS_CORPUS_H_
