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

#include "fraccomp/complementation.h"

#include <stdexcept>
#include <utility>

#include "fraccomp/error.h"
#include "fraccomp/text_reader.h"

namespace fraccomp {

LinearProgram Complement(const LinearProgram& lp) {
  lp.Validate();
  LinearProgram c;
  c.sense = lp.sense == Sense::kMaximize ? Sense::kMinimize : Sense::kMaximize;
  c.objective = lp.objective;
  c.rhs = lp.rhs;
  c.matrix = OuterProduct(lp.rhs, lp.objective) - lp.matrix;
  return c;
}

RationalVector ComplementSolution(const LinearProgram& lp,
                                  std::span<const Rational> x,
                                  const Rational& opt) {
  if (x.size() != lp.num_variables()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "solution length does not match the LP");
  }
  if (opt <= Rational(1)) {
    throw Error(ErrorCode::kOptimumAtMostOne,
                "solution mapping needs an optimum above 1, got " +
                    opt.ToString());
  }
  const Rational a = opt - Rational(1);
  RationalVector out;
  out.reserve(x.size());
  for (const Rational& xi : x) out.push_back(xi / a);
  return out;
}

std::string_view CaseName(ComplementationCase c) {
  switch (c) {
    case ComplementationCase::kBothAboveOne: return "BothAboveOne";
    case ComplementationCase::kPBelowOrAtOne: return "PBelowOrAtOne";
    case ComplementationCase::kPInfeasible: return "PInfeasible";
    case ComplementationCase::kPUnbounded: return "PUnbounded";
  }
  return "Unknown";
}

ComplementationReport VerifyComplementation(const LinearProgram& lp) {
  const LinearProgram comp = Complement(lp);
  ComplementationReport report;
  report.opt_p = Solve(lp);
  report.opt_c = Solve(comp);

  if (IsInfeasible(report.opt_p)) {
    report.lp_case = ComplementationCase::kPInfeasible;
    return report;
  }
  if (IsUnbounded(report.opt_p)) {
    report.lp_case = ComplementationCase::kPUnbounded;
    return report;
  }
  const auto& p = std::get<Optimal>(report.opt_p);
  if (p.value <= Rational(1)) {
    report.lp_case = ComplementationCase::kPBelowOrAtOne;
    bool rhs_nonnegative = true;
    for (const Rational& b : lp.rhs) rhs_nonnegative &= b.sign() >= 0;
    if (rhs_nonnegative) report.dichotomy_holds = !IsOptimal(report.opt_c);
    return report;
  }

  const auto* c = std::get_if<Optimal>(&report.opt_c);
  if (c == nullptr || c->value <= Rational(1)) {
    throw std::logic_error(
        "complement of an LP with optimum above 1 is not optimal above 1");
  }
  report.lp_case = ComplementationCase::kBothAboveOne;
  report.identity_lhs = Reciprocal(p.value) + Reciprocal(c->value);
  report.identity_holds = *report.identity_lhs == Rational(1);

  const RationalVector mapped = ComplementSolution(lp, p.solution, p.value);
  report.solution_maps =
      CheckFeasible(comp, mapped) && Dot(comp.objective, mapped) == c->value;
  return report;
}

namespace {

bool AllIntegral(const LinearProgram& lp) {
  for (const Rational& v : lp.objective) {
    if (!v.is_integer()) return false;
  }
  for (const Rational& v : lp.rhs) {
    if (!v.is_integer()) return false;
  }
  for (size_t i = 0; i < lp.num_constraints(); ++i) {
    for (const Rational& v : lp.matrix.row(i)) {
      if (!v.is_integer()) return false;
    }
  }
  return true;
}

}  // namespace

IpPairResult IpScaledPair(const LinearProgram& lp) {
  lp.Validate();
  if (lp.sense != Sense::kMaximize) {
    throw Error(ErrorCode::kInvalidArgument,
                "the scaled integer pair is built from a maximization LP");
  }
  if (!AllIntegral(lp)) {
    throw Error(ErrorCode::kNonIntegralData, "LP data must be integral");
  }
  const LpOutcome outcome = Solve(lp);
  const auto* opt = std::get_if<Optimal>(&outcome);
  if (opt == nullptr) {
    throw Error(ErrorCode::kNotOptimal,
                "LP is " + std::string(OutcomeName(outcome)));
  }
  if (opt->value <= Rational(1)) {
    throw Error(ErrorCode::kOptimumAtMostOne,
                "LP optimum " + opt->value.ToString() + " is not above 1");
  }

  IpPairResult result;
  result.s = CommonDenominator(opt->solution);
  const Rational s(result.s);
  const Rational t = s * (opt->value - Rational(1));
  // s.Opt = c.(s x) is an integer because c and s x are integral.
  result.t = t.numerator();

  RationalVector x_hat;
  x_hat.reserve(opt->solution.size());
  for (const Rational& xi : opt->solution) {
    x_hat.push_back(s * xi);
    result.x_hat.push_back(x_hat.back().numerator());
  }
  result.value = Dot(lp.objective, x_hat).numerator();

  const RationalVector ax = lp.matrix.Multiply(x_hat);
  const LinearProgram comp = Complement(lp);
  const RationalVector cx = comp.matrix.Multiply(x_hat);
  result.scaled_primal_feasible = true;
  result.scaled_complement_feasible = true;
  for (size_t i = 0; i < lp.num_constraints(); ++i) {
    result.scaled_primal_feasible &= ax[i] <= s * lp.rhs[i];
    result.scaled_complement_feasible &= cx[i] >= t * lp.rhs[i];
  }
  return result;
}

GameValue SolveGame(const MatrixGame& game) {
  const RationalMatrix& a = game.payoff;
  if (a.rows() == 0 || a.cols() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty payoff matrix");
  }
  for (size_t i = 0; i < a.rows(); ++i) {
    for (const Rational& v : a.row(i)) {
      if (v.sign() < 0 || v > Rational(1)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "payoff " + v.ToString() + " lies outside [0, 1]");
      }
    }
  }
  LinearProgram colin;
  colin.sense = Sense::kMaximize;
  colin.objective.assign(a.cols(), Rational(1));
  colin.matrix = a;
  colin.rhs.assign(a.rows(), Rational(1));

  const LpOutcome outcome = Solve(colin);
  if (IsUnbounded(outcome)) {
    throw Error(ErrorCode::kDegenerateGame, "game value is 0");
  }
  const Rational& opt = std::get<Optimal>(outcome).value;
  if (opt == Rational(1)) {
    throw Error(ErrorCode::kDegenerateGame, "game value is 1");
  }
  GameValue result;
  result.value = Reciprocal(opt);

  const LpOutcome rose = Solve(Dual(colin));
  for (const Rational& xi : std::get<Optimal>(rose).solution) {
    result.rose_strategy.push_back(result.value * xi);
  }
  return result;
}

MatrixGame ComplementaryGame(const MatrixGame& game) {
  const RationalMatrix& a = game.payoff;
  RationalMatrix swapped(a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) {
      swapped(j, i) = Rational(1) - a(i, j);
    }
  }
  return MatrixGame{std::move(swapped)};
}

ComplementaryGameCheck CheckComplementaryGame(const MatrixGame& game) {
  ComplementaryGameCheck check;
  check.v = SolveGame(game).value;
  check.v_bar = SolveGame(ComplementaryGame(game)).value;
  check.sum_is_one = check.v + check.v_bar == Rational(1);
  return check;
}

MatrixGame ParseMatrixGame(std::string_view text) {
  TextReader reader(text, "game");
  const std::vector<std::string> header = reader.NextTokens();
  if (header.size() != 3 || header[0] != "game") {
    reader.Fail("expected header 'game <m> <n>'");
  }
  const size_t m = reader.ParseCount(header[1]);
  const size_t n = reader.ParseCount(header[2]);
  if (m == 0 || n == 0) reader.Fail("game needs at least one row and column");
  std::vector<Rational> entries;
  entries.reserve(m * n);
  for (size_t i = 0; i < m; ++i) {
    const std::vector<std::string> row = reader.NextTokens();
    if (row.size() != n) {
      reader.Fail("expected " + std::to_string(n) + " payoffs per row");
    }
    for (const std::string& tok : row) {
      entries.push_back(reader.ParseRationalToken(tok));
    }
  }
  reader.ExpectEnd();
  return MatrixGame{RationalMatrix(m, n, std::move(entries))};
}

}  // namespace fraccomp
