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

#include <cstddef>
#include <string>
#include <vector>

#include "rotcc/approximator.hpp"
#include "rotcc/function.hpp"
#include "rotcc/io.hpp"
#include "rotcc/register.hpp"
#include "rotcc/simulator.hpp"

namespace rotcc {

// How argument registers are built for a given size.
struct RegisterLayout {
  // Two's complement over [-half_range, half_range) when weights is empty.
  double half_range = 0.5;
  std::vector<double> weights;
  std::string label;

  RegisterSpec build(std::size_t n) const;
};

// A budget either absolute or relative to the exact circuit's Toffoli count
// ("full" or "full-K").
struct BudgetSpec {
  double value = 0.0;
  bool relative_to_full = false;

  double resolve(std::uint64_t full_toffoli) const;
};

BudgetSpec parse_budget(std::string_view text);

enum class CircuitSource {
  kLookupTable,  // compile_lut + transform_lut
  kPolynomial,   // compile_polynomial (polynomial functions only)
};

struct SweepConfig {
  FunctionSpec function = FunctionSpec::arcsin();
  std::vector<std::size_t> sizes;
  RegisterLayout layout;
  BudgetKind budget_kind = BudgetKind::kToffoli;
  std::vector<BudgetSpec> budgets;
  CircuitSource source = CircuitSource::kLookupTable;
  RankOrder order = RankOrder::kContributionToCost;
  SimulationMode mode = SimulationMode::kFast;
};

// The exact circuit a sweep would start from.
RotationCircuit compile_exact(const FunctionSpec& f, const RegisterSpec& reg,
                              CircuitSource source);

// Applies one budget of the given kind. kNone keeps the circuit unchanged.
ApproximationResult approximate(const RotationCircuit& circuit, BudgetKind kind, double budget,
                                RankOrder order = RankOrder::kContributionToCost);

// Compile, approximate and simulate every (n, budget) pair. Errors carry the
// failing pair in their message.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

}  // namespace rotcc
