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

#include "rotcc/approximator.hpp"

#include <algorithm>
#include <cmath>

#include "rotcc/error.hpp"

namespace rotcc {

namespace {

double sort_key(const RankedGate& g, RankOrder order) {
  return order == RankOrder::kContributionToCost ? g.ratio : std::abs(g.gate.theta);
}

ApproximationResult split(const RotationCircuit& circuit,
                          std::span<const RankedGate> ranked, std::size_t omit_count) {
  std::vector<Mask> omitted_masks;
  omitted_masks.reserve(omit_count);
  ApproximationResult result{RotationCircuit(circuit.reg()), {}, 0.0, {}};
  result.omitted.reserve(omit_count);
  for (std::size_t i = 0; i < omit_count; ++i) {
    result.omitted.push_back(ranked[i].gate);
    omitted_masks.push_back(ranked[i].gate.controls);
  }
  std::sort(omitted_masks.begin(), omitted_masks.end());

  std::vector<RotationGate> kept;
  kept.reserve(circuit.size() - omit_count);
  for (const auto& g : circuit.gates()) {
    if (!std::binary_search(omitted_masks.begin(), omitted_masks.end(), g.controls)) {
      kept.push_back(g);
    }
  }
  result.kept = RotationCircuit(circuit.reg(), std::move(kept));
  result.bound = worst_case_bound(result.omitted);
  result.cost = cost_report(result.kept);
  return result;
}

}  // namespace

std::vector<RankedGate> rank_gates(const RotationCircuit& circuit, RankOrder order) {
  std::vector<RankedGate> ranked;
  for (const auto& g : circuit.gates()) {
    const int k = control_count(g.controls);
    if (k < 2 || g.theta == 0.0) continue;
    ranked.push_back({g, std::abs(g.theta) / static_cast<double>(toffoli_cost(k))});
  }
  std::sort(ranked.begin(), ranked.end(), [order](const RankedGate& a, const RankedGate& b) {
    const double ka = sort_key(a, order);
    const double kb = sort_key(b, order);
    if (ka != kb) return ka < kb;
    const int ca = control_count(a.gate.controls);
    const int cb = control_count(b.gate.controls);
    if (ca != cb) return ca > cb;
    return a.gate.controls < b.gate.controls;
  });
  return ranked;
}

ApproximationResult truncate_to_toffoli_budget(const RotationCircuit& circuit,
                                               std::int64_t budget, RankOrder order) {
  if (budget < 0) fail(ErrorCode::kInvalidArgument, "Toffoli budget must be non-negative");
  const auto ranked = rank_gates(circuit, order);
  std::uint64_t toffoli = cost_report(circuit).toffoli_count;
  const auto limit = static_cast<std::uint64_t>(budget);
  std::size_t omit = 0;
  while (toffoli > limit && omit < ranked.size()) {
    toffoli -= toffoli_cost(control_count(ranked[omit].gate.controls));
    ++omit;
  }
  return split(circuit, ranked, omit);
}

ApproximationResult truncate_to_error_budget(const RotationCircuit& circuit, double eps,
                                             RankOrder order) {
  if (!(eps >= 0.0)) fail(ErrorCode::kInvalidArgument, "error budget must be non-negative");
  const auto ranked = rank_gates(circuit, order);
  double spent = 0.0;
  std::size_t omit = 0;
  while (omit < ranked.size()) {
    const double next = spent + std::abs(ranked[omit].gate.theta);
    if (next > eps) break;
    spent = next;
    ++omit;
  }
  return split(circuit, ranked, omit);
}

double worst_case_bound(std::span<const RotationGate> omitted) {
  double bound = 0.0;
  for (const auto& g : omitted) bound += std::abs(g.theta);
  return bound;
}

}  // namespace rotcc
