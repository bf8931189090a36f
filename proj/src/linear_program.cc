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

#include "fraccomp/linear_program.h"

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "fraccomp/error.h"
#include "fraccomp/text_reader.h"

namespace fraccomp {

RationalMatrix::RationalMatrix(size_t rows, size_t cols,
                               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix entry count does not match rows x cols");
  }
}

RationalMatrix RationalMatrix::FromRows(
    const std::vector<std::vector<Rational>>& rows) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RationalMatrix(rows.size(), cols, std::move(entries));
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalVector RationalMatrix::Multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix-vector product length mismatch");
  }
  RationalVector out(rows_);
  for (size_t r = 0; r < rows_; ++r) out[r] = Dot(row(r), x);
  return out;
}

RationalMatrix OuterProduct(std::span<const Rational> u,
                            std::span<const Rational> v) {
  RationalMatrix out(u.size(), v.size());
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference shape");
  }
  RationalMatrix out(a.rows(), a.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  }
  return out;
}

void LinearProgram::Validate() const {
  if (objective.size() != matrix.cols() || rhs.size() != matrix.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP with " + std::to_string(matrix.rows()) + "x" +
                    std::to_string(matrix.cols()) + " matrix has objective " +
                    std::to_string(objective.size()) + " and rhs " +
                    std::to_string(rhs.size()));
  }
}

std::string_view OutcomeName(const LpOutcome& o) {
  if (IsOptimal(o)) return "optimal";
  if (IsInfeasible(o)) return "infeasible";
  return "unbounded";
}

namespace {

// Dense simplex tableau for {max cost.z : T z = rhs, z >= 0} with an explicit
// basis. Column indices are ordered structural, slack, artificial.
class Tableau {
 public:
  Tableau(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), basis_(rows) {}

  Rational& at(size_t r, size_t c) { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(size_t r) { return at(r, cols_); }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  std::vector<size_t>& basis() { return basis_; }

  void Pivot(size_t pr, size_t pc) {
    const Rational inv = Reciprocal(at(pr, pc));
    for (size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const Rational factor = at(r, pc);
      if (factor.is_zero()) continue;
      for (size_t c = 0; c <= cols_; ++c) {
        if (!at(pr, c).is_zero()) at(r, c) -= factor * at(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  void EraseRow(size_t r) {
    const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1));
    cells_.erase(first, first + static_cast<std::ptrdiff_t>(cols_ + 1));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  enum class Status { kOptimal, kUnbounded };

  // Maximizes cost.z over columns < `active_cols` with Bland's rule.
  Status Maximize(const std::vector<Rational>& cost, size_t active_cols) {
    std::vector<bool> is_basic(cols_, false);
    for (;;) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (size_t b : basis_) is_basic[b] = true;

      std::optional<size_t> entering;
      for (size_t c = 0; c < active_cols && !entering; ++c) {
        if (is_basic[c]) continue;
        Rational reduced = cost[c];
        for (size_t r = 0; r < rows_; ++r) {
          const Rational& a = at(r, c);
          if (!a.is_zero()) reduced -= cost[basis_[r]] * a;
        }
        if (reduced.sign() > 0) entering = c;
      }
      if (!entering) return Status::kOptimal;

      std::optional<size_t> leaving;
      Rational best_ratio;
      for (size_t r = 0; r < rows_; ++r) {
        const Rational& a = at(r, *entering);
        if (a.sign() <= 0) continue;
        Rational ratio = rhs(r) / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return Status::kUnbounded;
      Pivot(*leaving, *entering);
    }
  }

 private:
  size_t rows_;
  size_t cols_;
  std::vector<Rational> cells_;
  std::vector<size_t> basis_;
};

}  // namespace

LpOutcome Solve(const LinearProgram& lp) {
  lp.Validate();
  const size_t m = lp.num_constraints();
  const size_t n = lp.num_variables();
  const bool maximize = lp.sense == Sense::kMaximize;

  // Reduce to {max c.x : Ax <= b, x >= 0}.
  auto c_of = [&](size_t j) { return maximize ? lp.objective[j] : -lp.objective[j]; };
  auto a_of = [&](size_t i, size_t j) {
    return maximize ? lp.matrix(i, j) : -lp.matrix(i, j);
  };
  auto b_of = [&](size_t i) { return maximize ? lp.rhs[i] : -lp.rhs[i]; };

  std::vector<size_t> needs_artificial;
  for (size_t i = 0; i < m; ++i) {
    if (b_of(i).sign() < 0) needs_artificial.push_back(i);
  }
  const size_t num_art = needs_artificial.size();
  const size_t slack0 = n;
  const size_t art0 = n + m;
  Tableau t(m, n + m + num_art);

  size_t next_art = art0;
  for (size_t i = 0; i < m; ++i) {
    const bool flip = b_of(i).sign() < 0;
    for (size_t j = 0; j < n; ++j) {
      t.at(i, j) = flip ? -a_of(i, j) : a_of(i, j);
    }
    t.at(i, slack0 + i) = flip ? -1 : 1;
    t.rhs(i) = flip ? -b_of(i) : b_of(i);
    if (flip) {
      t.at(i, next_art) = 1;
      t.basis()[i] = next_art++;
    } else {
      t.basis()[i] = slack0 + i;
    }
  }

  if (num_art > 0) {
    std::vector<Rational> phase1(t.cols());
    for (size_t k = art0; k < t.cols(); ++k) phase1[k] = -1;
    t.Maximize(phase1, t.cols());
    Rational infeasibility;
    for (size_t r = 0; r < t.rows(); ++r) {
      if (t.basis()[r] >= art0) infeasibility += t.rhs(r);
    }
    if (infeasibility.sign() > 0) return Infeasible{};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (size_t r = t.rows(); r-- > 0;) {
      if (t.basis()[r] < art0) continue;
      std::optional<size_t> col;
      for (size_t c = 0; c < art0 && !col; ++c) {
        if (!t.at(r, c).is_zero()) col = c;
      }
      if (col) {
        t.Pivot(r, *col);
      } else {
        t.EraseRow(r);
      }
    }
  }

  std::vector<Rational> phase2(t.cols());
  for (size_t j = 0; j < n; ++j) phase2[j] = c_of(j);
  if (t.Maximize(phase2, art0) == Tableau::Status::kUnbounded) {
    return Unbounded{};
  }

  RationalVector x(n);
  for (size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) x[t.basis()[r]] = t.rhs(r);
  }
  Rational value = Dot(lp.objective, x);
  return Optimal{std::move(value), std::move(x)};
}

LinearProgram Dual(const LinearProgram& lp) {
  lp.Validate();
  LinearProgram d;
  d.sense = lp.sense == Sense::kMaximize ? Sense::kMinimize : Sense::kMaximize;
  d.objective = lp.rhs;
  d.matrix = lp.matrix.Transpose();
  d.rhs = lp.objective;
  return d;
}

bool CheckFeasible(const LinearProgram& lp, std::span<const Rational> x) {
  lp.Validate();
  if (x.size() != lp.num_variables()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "candidate solution has wrong length");
  }
  for (const Rational& xi : x) {
    if (xi.sign() < 0) return false;
  }
  const RationalVector lhs = lp.matrix.Multiply(x);
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (lp.sense == Sense::kMaximize ? lhs[i] > lp.rhs[i] : lhs[i] < lp.rhs[i]) {
      return false;
    }
  }
  return true;
}

LinearProgram ParseLinearProgram(std::string_view text) {
  TextReader reader(text, "lp");
  std::vector<std::string> header = reader.NextTokens();
  if (header.size() != 4 || header[0] != "lp" ||
      (header[1] != "max" && header[1] != "min")) {
    reader.Fail("expected header 'lp <max|min> <m> <n>'");
  }
  const size_t m = reader.ParseCount(header[2]);
  const size_t n = reader.ParseCount(header[3]);

  auto read_vector = [&](std::string_view keyword, size_t len) {
    std::vector<std::string> tokens = reader.NextTokens();
    if (tokens.empty() || tokens[0] != keyword) {
      reader.Fail("expected '" + std::string(keyword) + "' line");
    }
    if (tokens.size() != len + 1) {
      reader.Fail("'" + std::string(keyword) + "' expects " +
                  std::to_string(len) + " values");
    }
    RationalVector out;
    out.reserve(len);
    for (size_t k = 1; k < tokens.size(); ++k) {
      out.push_back(reader.ParseRationalToken(tokens[k]));
    }
    return out;
  };

  LinearProgram lp;
  lp.sense = header[1] == "max" ? Sense::kMaximize : Sense::kMinimize;
  lp.objective = read_vector("obj", n);
  lp.rhs = read_vector("rhs", m);
  std::vector<Rational> entries;
  entries.reserve(m * n);
  for (size_t i = 0; i < m; ++i) {
    RationalVector row = read_vector("row", n);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  reader.ExpectEnd();
  lp.matrix = RationalMatrix(m, n, std::move(entries));
  return lp;
}

std::string FormatLinearProgram(const LinearProgram& lp) {
  lp.Validate();
  std::ostringstream out;
  out << "lp " << (lp.sense == Sense::kMaximize ? "max" : "min") << ' '
      << lp.num_constraints() << ' ' << lp.num_variables() << '\n';
  out << "obj";
  for (const Rational& v : lp.objective) out << ' ' << v;
  out << "\nrhs";
  for (const Rational& v : lp.rhs) out << ' ' << v;
  out << '\n';
  for (size_t i = 0; i < lp.num_constraints(); ++i) {
    out << "row";
    for (const Rational& v : lp.matrix.row(i)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace fraccomp
