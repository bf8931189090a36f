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

#include "fraccomp/error.h"

#include <string>

namespace fraccomp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotOptimal: return "NotOptimal";
    case ErrorCode::kOptimumAtMostOne: return "OptimumAtMostOne";
    case ErrorCode::kNonIntegralData: return "NonIntegralData";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kInfeasibleParameter: return "InfeasibleParameter";
    case ErrorCode::kUnboundedParameter: return "UnboundedParameter";
    case ErrorCode::kNoAdmissibleSubset: return "NoAdmissibleSubset";
    case ErrorCode::kNotNontrivial: return "NotNontrivial";
    case ErrorCode::kUnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::kExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorCode::kRankZero: return "RankZero";
    case ErrorCode::kTrivialMatroid: return "TrivialMatroid";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNoTotalDominatingSet: return "NoTotalDominatingSet";
    case ErrorCode::kInUniversalVertex: return "InUniversalVertex";
  }
  return "Unknown";
}

void EnumerationBudget::RequireSubsets(int bits, std::string_view what) const {
  if (bits >= 63 || (std::uint64_t{1} << bits) > max_enum) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + ": 2^" + std::to_string(bits) +
                    " subsets exceed the enumeration budget of " +
                    std::to_string(max_enum));
  }
}

void BudgetMeter::Tick(std::uint64_t n) {
  used_ += n;
  if (used_ > limit_) {
    throw Error(ErrorCode::kBudgetExceeded,
                what_ + ": search exceeded the enumeration budget of " +
                    std::to_string(limit_));
  }
}

}  // namespace fraccomp
