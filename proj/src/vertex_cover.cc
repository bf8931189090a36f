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

#include "fraccomp/vertex_cover.h"

#include <algorithm>
#include <utility>

namespace fraccomp {
namespace {

int FloorDiv(long num, long den) {
  return static_cast<int>(Floor(Rational(num, den)).numerator().get_si());
}

}  // namespace

bool IsVertexCover(const Graph& g, const VertexSet& s) {
  std::vector<bool> in(static_cast<size_t>(g.num_vertices()), false);
  for (int v : s) {
    if (v < 0 || v >= g.num_vertices()) return false;
    in[static_cast<size_t>(v)] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
    return in[static_cast<size_t>(e.first)] || in[static_cast<size_t>(e.second)];
  });
}

int BudgetUsed(int num_vertices, const std::vector<VertexSet>& covers) {
  std::vector<int> count(static_cast<size_t>(num_vertices), 0);
  for (const VertexSet& s : covers) {
    for (int v : s) ++count[static_cast<size_t>(v)];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

bool IsValidCoverFamily(const Graph& g, const CoverFamily& family, int b) {
  for (const VertexSet& s : family.covers) {
    if (!IsVertexCover(g, s)) return false;
  }
  return family.budget_used == BudgetUsed(g.num_vertices(), family.covers) &&
         family.budget_used <= b;
}

CFoldTable::CFoldTable(Graph g, EnumerationBudget budget)
    : g_(std::move(g)), budget_(budget) {}

int CFoldTable::chi(int c) {
  if (c == 0) return 0;
  return coloring(c).num_colors;
}

const Coloring& CFoldTable::coloring(int c) {
  if (c < 1) throw Error(ErrorCode::kInvalidArgument, "c must be >= 1");
  if (colorings_.size() <= static_cast<size_t>(c)) {
    colorings_.resize(static_cast<size_t>(c) + 1);
  }
  auto& slot = colorings_[static_cast<size_t>(c)];
  if (!slot) {
    // Deleting one color class from a (c)-fold coloring leaves a (c-1)-fold
    // one, so chi_c >= chi_{c-1} + 1.
    // Also chi_c >= c * chi_f.
    int hint = c > 1 ? chi(c - 1) + 1 : 0;
    if (g_.num_edges() > 0) {
      if (!chi_f_) chi_f_ = FractionalChromatic(g_, budget_);
      const Rational scaled = *chi_f_ * Rational(c);
      Rational ceiling = Floor(scaled);
      if (ceiling != scaled) ceiling = ceiling + Rational(1);
      hint = std::max(hint, static_cast<int>(ceiling.numerator().get_si()));
    }
    slot = OptimalColoring(LexicographicProduct(g_, c), hint, budget_);
  }
  return *slot;
}

BudgetCoverResult BudgetCover(const Graph& g, int b,
                              const EnumerationBudget& budget) {
  CFoldTable table(g, budget);
  return BudgetCover(table, b);
}

BudgetCoverResult BudgetCover(CFoldTable& table, int b) {
  const Graph& g = table.graph();
  if (g.num_edges() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  }
  if (b < 1) throw Error(ErrorCode::kInvalidArgument, "budget b must be >= 1");

  int c = 0;
  while (table.chi(c + 1) <= b + c + 1) ++c;

  const int n = g.num_vertices();
  BudgetCoverResult result;
  result.c = c;
  result.t = b + c;
  if (c == 0) {
    VertexSet all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    result.witness.covers.assign(static_cast<size_t>(b), all);
  } else {
    const Coloring& coloring = table.coloring(c);
    const int classes = b + c;
    std::vector<std::vector<bool>> in_class(
        static_cast<size_t>(classes),
        std::vector<bool>(static_cast<size_t>(n), false));
    for (int v = 0; v < n; ++v) {
      for (int a = 0; a < c; ++a) {
        const int color = coloring.colors[static_cast<size_t>(v * c + a)];
        in_class[static_cast<size_t>(color)][static_cast<size_t>(v)] = true;
      }
    }
    for (int i = 0; i < classes; ++i) {
      VertexSet cover;
      for (int v = 0; v < n; ++v) {
        if (!in_class[static_cast<size_t>(i)][static_cast<size_t>(v)]) {
          cover.push_back(v);
        }
      }
      result.witness.covers.push_back(std::move(cover));
    }
  }
  result.witness.budget_used = BudgetUsed(n, result.witness.covers);
  if (static_cast<int>(result.witness.covers.size()) != result.t ||
      !IsValidCoverFamily(g, result.witness, b)) {
    throw std::logic_error("budget cover witness failed validation");
  }
  return result;
}

BudgetReport VerifyBudget(const Graph& g, int b_max,
                          const EnumerationBudget& budget) {
  if (g.num_edges() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  }
  if (b_max < 1) throw Error(ErrorCode::kInvalidArgument, "b_max must be >= 1");

  BudgetReport report;
  CFoldTable table(g, budget);
  report.kappa = KappaF(g, budget).kappa;
  report.chi = table.chi(1);
  report.omega = CliqueNumber(g, budget);
  report.bipartite = IsBipartite(g);

  bool rows_hold = true;
  std::vector<int> t_of(static_cast<size_t>(b_max) + 1, 0);
  for (int b = 1; b <= b_max; ++b) {
    const BudgetCoverResult cover = BudgetCover(table, b);
    BudgetRow row;
    row.b = b;
    row.t = cover.t;
    t_of[static_cast<size_t>(b)] = cover.t;
    row.floor_lower = FloorDiv(static_cast<long>(report.chi) * b, report.chi - 1);
    row.floor_upper =
        FloorDiv(static_cast<long>(report.omega) * b, report.omega - 1);
    row.floors_hold = row.floor_lower <= row.t && row.t <= row.floor_upper;
    row.ratio_within_kappa = Rational(row.t, b) <= report.kappa;
    row.iff_holds = true;
    for (int c = 1; c <= b; ++c) {
      if ((row.t >= b + c) != (table.chi(c) <= b + c)) row.iff_holds = false;
    }
    row.witness_valid =
        static_cast<int>(cover.witness.covers.size()) == row.t &&
        IsValidCoverFamily(g, cover.witness, b);
    rows_hold = rows_hold && row.floors_hold && row.ratio_within_kappa &&
                row.iff_holds && row.witness_valid;
    report.rows.push_back(row);
  }

  report.monotone_scan_holds = true;
  for (int c = 0; c <= b_max + 1; ++c) report.chi_c.push_back(table.chi(c));
  for (int c = 0; c <= b_max; ++c) {
    if (report.chi_c[static_cast<size_t>(c) + 1] - (c + 1) <
        report.chi_c[static_cast<size_t>(c)] - c) {
      report.monotone_scan_holds = false;
    }
  }

  const long den = report.kappa.denominator().get_si();
  report.search_limit = static_cast<int>(den * std::max(b_max, 4));
  for (int b = 1; b <= report.search_limit && !report.beta; ++b) {
    const int t = b <= b_max ? t_of[static_cast<size_t>(b)]
                             : BudgetCover(table, b).t;
    if (Rational(t, b) == report.kappa) report.beta = b;
  }
  if (report.beta) {
    bool ok = true;
    for (int b = *report.beta; b <= std::max(b_max, *report.beta);
         b += *report.beta) {
      const int t = b <= b_max ? t_of[static_cast<size_t>(b)]
                               : BudgetCover(table, b).t;
      ok = ok && Rational(t, b) == report.kappa;
    }
    report.beta_multiples_hold = ok;
  }

  report.kappa_is_two = report.kappa == Rational(2);
  report.some_b_doubles = false;
  report.all_b_double = true;
  for (int b = 1; b <= b_max; ++b) {
    const bool doubles = t_of[static_cast<size_t>(b)] == 2 * b;
    report.some_b_doubles = report.some_b_doubles || doubles;
    report.all_b_double = report.all_b_double && doubles;
  }
  report.bipartite_equivalence_holds =
      report.kappa_is_two == report.some_b_doubles &&
      report.some_b_doubles == report.all_b_double &&
      report.all_b_double == report.bipartite;

  report.all_hold = rows_hold && report.monotone_scan_holds &&
                    report.bipartite_equivalence_holds &&
                    report.beta_multiples_hold.value_or(true);
  return report;
}

}  // namespace fraccomp
