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

#ifndef FRACCOMP_LINEAR_PROGRAM_H_
#define FRACCOMP_LINEAR_PROGRAM_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fraccomp/rational.h"

namespace fraccomp {

// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(size_t rows, size_t cols, std::vector<Rational> entries);
  static RationalMatrix FromRows(const std::vector<std::vector<Rational>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Rational> row(size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  RationalMatrix Transpose() const;
  RationalVector Multiply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Outer product u * v^T.
RationalMatrix OuterProduct(std::span<const Rational> u,
                            std::span<const Rational> v);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

enum class Sense { kMaximize, kMinimize };

// Maximize reads {max c.x : Ax <= b, x >= 0}; Minimize reads
// {min v.x : Mx >= u, x >= 0}. Nonnegativity is implicit and never stored.
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  RationalVector objective;  // length n
  RationalMatrix matrix;     // m x n
  RationalVector rhs;        // length m

  size_t num_constraints() const { return matrix.rows(); }
  size_t num_variables() const { return matrix.cols(); }

  // Throws kDimensionMismatch.
  void Validate() const;

  friend bool operator==(const LinearProgram&, const LinearProgram&) = default;
};

struct Optimal {
  Rational value;
  RationalVector solution;  // a basic feasible solution attaining value
};
struct Infeasible {};
struct Unbounded {};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

inline bool IsOptimal(const LpOutcome& o) {
  return std::holds_alternative<Optimal>(o);
}
inline bool IsInfeasible(const LpOutcome& o) {
  return std::holds_alternative<Infeasible>(o);
}
inline bool IsUnbounded(const LpOutcome& o) {
  return std::holds_alternative<Unbounded>(o);
}
std::string_view OutcomeName(const LpOutcome& o);

// Two-phase primal simplex in exact arithmetic with Bland's smallest-index
// rule. Deterministic.
LpOutcome Solve(const LinearProgram& lp);

// Maximize{c, A, b} <-> Minimize{b, A^T, c}.
LinearProgram Dual(const LinearProgram& lp);

// x >= 0 and every constraint holds exactly under lp.sense.
bool CheckFeasible(const LinearProgram& lp, std::span<const Rational> x);

// Text format:
//   lp <max|min> <m> <n>
//   obj <n rationals>
//   rhs <m rationals>
//   row <n rationals>   (m times)
// Lines starting with '#' are comments. Throws Error(kParse).
LinearProgram ParseLinearProgram(std::string_view text);
std::string FormatLinearProgram(const LinearProgram& lp);

}  // namespace fraccomp

#endif  // FRACCOMP_LINEAR_PROGRAM_H_
