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

#ifndef FRACCOMP_ERROR_H_
#define FRACCOMP_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fraccomp {

enum class ErrorCode {
  kParse,
  kDimensionMismatch,
  kInvalidArgument,
  kBudgetExceeded,
  // LP complementation.
  kNotOptimal,
  kOptimumAtMostOne,
  kNonIntegralData,
  kDegenerateGame,
  // Hypergraphs.
  kInfeasibleParameter,
  kUnboundedParameter,
  kNoAdmissibleSubset,
  kNotNontrivial,
  // Matroids.
  kUnequalBasisSizes,
  kExchangeAxiomViolated,
  kRankZero,
  kTrivialMatroid,
  kDisconnected,
  kNoEdges,
  // Graphs.
  kEmptyGraph,
  kNoTotalDominatingSet,
  kInUniversalVertex,
};

std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. Callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Cap on brute-force subset/search-node evaluations. Exceeding it raises
// ErrorCode::kBudgetExceeded; results are never silently truncated.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMaxEnum = std::uint64_t{1} << 22;

  std::uint64_t max_enum = kDefaultMaxEnum;

  // Throws kBudgetExceeded unless 2^bits subsets fit in the budget.
  void RequireSubsets(int bits, std::string_view what) const;
};

// Counts evaluations against a budget for searches of unknown size.
class BudgetMeter {
 public:
  BudgetMeter(const EnumerationBudget& budget, std::string_view what)
      : limit_(budget.max_enum), what_(what) {}

  void Tick(std::uint64_t n = 1);
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace fraccomp

#endif  // FRACCOMP_ERROR_H_
