// Copyright 2026 The rotcc Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotcc/circuit.hpp"

namespace rotcc {

enum class RankOrder {
  // |theta| / toffoli_cost(|controls|), cheapest contribution per Toffoli first.
  kContributionToCost,
  // |theta| alone.
  kAbsoluteAngle,
};

struct RankedGate {
  RotationGate gate;
  double ratio = 0.0;  // |theta| / toffoli_cost(|controls|)
};

// Omission candidates: nonzero gates with at least two controls, ascending by
// the order's key. Equal keys put gates with more controls first, then lower
// masks.
std::vector<RankedGate> rank_gates(const RotationCircuit& circuit,
                                   RankOrder order = RankOrder::kContributionToCost);

struct ApproximationResult {
  RotationCircuit kept;
  std::vector<RotationGate> omitted;  // in omission order
  double bound = 0.0;                 // sum of |theta| over omitted
  CostReport cost;                    // of kept
};

// Omits the shortest ranked prefix after which the kept circuit needs at most
// `budget` Toffoli gates. Gates with fewer than two controls are never omitted.
ApproximationResult truncate_to_toffoli_budget(
    const RotationCircuit& circuit, std::int64_t budget,
    RankOrder order = RankOrder::kContributionToCost);

// Omits ranked gates while the accumulated |theta| stays within eps.
ApproximationResult truncate_to_error_budget(
    const RotationCircuit& circuit, double eps,
    RankOrder order = RankOrder::kContributionToCost);

// Largest possible deviation introduced by omitting these gates, reached on
// the all-ones input.
double worst_case_bound(std::span<const RotationGate> omitted);

}  // namespace rotcc
