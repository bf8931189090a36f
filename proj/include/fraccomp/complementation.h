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

#ifndef FRACCOMP_COMPLEMENTATION_H_
#define FRACCOMP_COMPLEMENTATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fraccomp/linear_program.h"
#include "fraccomp/rational.h"

namespace fraccomp {

// The complement of an LP:
//   max{c.x : Ax <= b}  ->  min{c.x : (b c^T - A)x >= b}
//   min{v.x : Mx >= u}  ->  max{v.x : (u v^T - M)x <= u}
// Objective and rhs carry over unchanged. An involution that commutes with
// Dual().
LinearProgram Complement(const LinearProgram& lp);

// Maps an optimal solution x of lp with value opt > 1 to x / (opt - 1), an
// optimal solution of Complement(lp). Throws kOptimumAtMostOne.
RationalVector ComplementSolution(const LinearProgram& lp,
                                  std::span<const Rational> x,
                                  const Rational& opt);

enum class ComplementationCase {
  kBothAboveOne,
  kPBelowOrAtOne,
  kPInfeasible,
  kPUnbounded,
};
std::string_view CaseName(ComplementationCase c);

struct ComplementationReport {
  LpOutcome opt_p;
  LpOutcome opt_c;
  ComplementationCase lp_case = ComplementationCase::kPInfeasible;
  // Set only for kBothAboveOne.
  std::optional<Rational> identity_lhs;  // 1/Opt(P) + 1/Opt(complement)
  bool identity_holds = false;
  // For kPBelowOrAtOne with rhs >= 0: complement is Infeasible or Unbounded.
  // Unset when the rhs has a negative entry (the dichotomy does not apply).
  std::optional<bool> dichotomy_holds;
  // For kBothAboveOne: the mapped solution is feasible for the complement and
  // attains its optimum.
  bool solution_maps = false;
};

ComplementationReport VerifyComplementation(const LinearProgram& lp);

// Scaled integer pair for an integral Maximize LP with Opt > 1: with s the
// least common denominator of the basic optimal x and t = s (Opt - 1),
// x_hat = s x is feasible for A x <= s b and (b c^T - A) x >= t b with value
// s + t.
struct IpPairResult {
  mpz_class s;
  mpz_class t;
  std::vector<mpz_class> x_hat;
  mpz_class value;
  bool scaled_primal_feasible = false;
  bool scaled_complement_feasible = false;
};

IpPairResult IpScaledPair(const LinearProgram& lp);

// Payoff matrix for Rose (rows) against Colin (columns).
struct MatrixGame {
  RationalMatrix payoff;
};

struct GameValue {
  Rational value;
  RationalVector rose_strategy;  // probability vector over rows
};

// Value via V = 1 / Opt(max{1.y : Ay <= 1, y >= 0}); y is indexed by Colin's
// columns, so Rose's strategy is read off the dual min{1.x : A^T x >= 1}.
// Requires every payoff in [0, 1] (kInvalidArgument) and 0 < V < 1
// (kDegenerateGame).
GameValue SolveGame(const MatrixGame& game);

struct ComplementaryGameCheck {
  Rational v;
  Rational v_bar;
  bool sum_is_one = false;
};

// Values of the game A and of the role-swapped game 1 - A^T.
ComplementaryGameCheck CheckComplementaryGame(const MatrixGame& game);

MatrixGame ComplementaryGame(const MatrixGame& game);

// Format: "game <m> <n>" then m rows of n rationals.
MatrixGame ParseMatrixGame(std::string_view text);

}  // namespace fraccomp

#endif  // FRACCOMP_COMPLEMENTATION_H_
