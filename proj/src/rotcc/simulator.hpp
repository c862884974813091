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
#include <vector>

#include "rotcc/circuit.hpp"
#include "rotcc/function.hpp"
#include "rotcc/lookup_table.hpp"

namespace rotcc {

enum class SimulationMode {
  // Subset-sum transform over the dense angle vector, O(n 2^n).
  kFast,
  // Per input, add up every firing gate in ascending mask order.
  kAccumulator,
};

// Accumulated target angle on basis input `mask`.
double evaluate(const RotationCircuit& circuit, Mask mask);

// evaluate() for every mask 0 .. 2^n - 1.
std::vector<double> evaluate_all(const RotationCircuit& circuit,
                                 SimulationMode mode = SimulationMode::kFast);

struct ErrorReport {
  double max_error = 0.0;
  double avg_error = 0.0;
  Mask argmax_mask = 0;
  double argmax_value = 0.0;  // register value at argmax_mask
  std::vector<Mask> excluded;
  std::size_t samples = 0;
};

// Largest and mean absolute deviation from f over all non-excluded inputs.
ErrorReport error_metrics(const RotationCircuit& circuit, const FunctionSpec& f,
                          SimulationMode mode = SimulationMode::kFast);
ErrorReport error_metrics(const RotationCircuit& circuit, const LookupTable& target,
                          SimulationMode mode = SimulationMode::kFast);

// Worst error of the zero-cost approximation arcsin(x) ~ x over the register.
double taylor_baseline(const RegisterSpec& reg);

struct Amplitudes {
  double zero = 1.0;
  double one = 0.0;
};

// Ry(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>.
Amplitudes rotation_amplitudes(double theta);

}  // namespace rotcc
