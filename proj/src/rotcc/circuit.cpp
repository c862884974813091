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

#include "rotcc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "rotcc/error.hpp"

namespace rotcc {

namespace {

void check_gate(const RegisterSpec& reg, const RotationGate& gate) {
  if (!reg.contains(gate.controls)) {
    fail(ErrorCode::kInvalidArgument, "control mask " + std::to_string(gate.controls) +
                                          " exceeds a " + std::to_string(reg.size()) +
                                          "-qubit register");
  }
  if (!std::isfinite(gate.theta)) {
    fail(ErrorCode::kInvalidArgument,
         "gate on mask " + std::to_string(gate.controls) + " has a non-finite angle");
  }
}

}  // namespace

RotationCircuit::RotationCircuit(RegisterSpec reg, std::vector<RotationGate> gates)
    : register_(std::move(reg)), gates_(std::move(gates)) {
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    check_gate(register_, gates_[i]);
    if (i > 0 && gates_[i - 1].controls >= gates_[i].controls) {
      fail(ErrorCode::kInvalidArgument, "gates must have strictly ascending masks");
    }
  }
}

RotationCircuit RotationCircuit::from_dense(RegisterSpec reg, std::vector<double> angles) {
  if (angles.size() != reg.state_count()) {
    fail(ErrorCode::kInvalidArgument, "dense angle vector must have 2^n entries");
  }
  std::vector<RotationGate> gates(angles.size());
  for (std::size_t m = 0; m < angles.size(); ++m) {
    gates[m] = {static_cast<Mask>(m), angles[m]};
  }
  return RotationCircuit(std::move(reg), std::move(gates));
}

double RotationCircuit::angle(Mask controls) const {
  auto it = std::lower_bound(
      gates_.begin(), gates_.end(), controls,
      [](const RotationGate& g, Mask m) { return g.controls < m; });
  return it != gates_.end() && it->controls == controls ? it->theta : 0.0;
}

std::vector<double> RotationCircuit::dense_angles() const {
  std::vector<double> dense(register_.state_count(), 0.0);
  for (const auto& g : gates_) dense[g.controls] = g.theta;
  return dense;
}

RotationCircuit canonicalize(RegisterSpec reg, std::span<const RotationGate> gates,
                             double zero_tol) {
  if (!(zero_tol >= 0.0)) {
    fail(ErrorCode::kInvalidArgument, "zero tolerance must be non-negative");
  }
  std::map<Mask, double> merged;
  for (const auto& g : gates) {
    check_gate(reg, g);
    auto [it, inserted] = merged.try_emplace(g.controls, g.theta);
    if (!inserted) it->second += g.theta;
  }
  std::vector<RotationGate> out;
  out.reserve(merged.size());
  for (const auto& [mask, theta] : merged) {
    if (std::abs(theta) > zero_tol) out.push_back({mask, theta});
  }
  return RotationCircuit(std::move(reg), std::move(out));
}

RotationCircuit canonicalize(const RotationCircuit& circuit, double zero_tol) {
  return canonicalize(circuit.reg(), circuit.gates(), zero_tol);
}

CostReport cost_report(std::span<const RotationGate> gates) {
  CostReport report;
  for (const auto& g : gates) {
    if (g.theta == 0.0) continue;
    const int k = control_count(g.controls);
    ++report.gate_count;
    report.toffoli_count += toffoli_cost(k);
    report.max_controls = std::max(report.max_controls, k);
  }
  report.ancilla_count = report.max_controls > 1 ? report.max_controls - 1 : 0;
  return report;
}

CostReport cost_report(const RotationCircuit& circuit) {
  return cost_report(circuit.gates());
}

}  // namespace rotcc
