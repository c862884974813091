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

#include "rotcc/register.hpp"

namespace rotcc {

struct RotationGate {
  Mask controls = 0;
  double theta = 0.0;

  friend bool operator==(const RotationGate&, const RotationGate&) = default;
};

// Toffoli gates needed by the ancilla ladder for a k-controlled rotation.
constexpr std::uint64_t toffoli_cost(int controls) {
  return controls >= 2 ? 2 * static_cast<std::uint64_t>(controls - 1) : 0;
}

struct CostReport {
  std::uint64_t gate_count = 0;
  std::uint64_t toffoli_count = 0;
  std::uint64_t ancilla_count = 0;
  int max_controls = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

// Subset-firing rotation circuit: on basis input m every gate whose control
// set is contained in m adds its angle to the target rotation.
//
// Gates are kept sorted by ascending mask with unique masks. Zero angles are
// allowed and ignored by the cost model.
class RotationCircuit {
 public:
  explicit RotationCircuit(RegisterSpec reg) : register_(std::move(reg)) {}

  // Takes an already canonical gate list; throws if masks are unsorted,
  // duplicated, out of range or any angle is non-finite.
  RotationCircuit(RegisterSpec reg, std::vector<RotationGate> gates);

  // Dense angle vector indexed by mask; every entry becomes a gate.
  static RotationCircuit from_dense(RegisterSpec reg, std::vector<double> angles);

  const RegisterSpec& reg() const { return register_; }
  std::span<const RotationGate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  // Angle of the gate on exactly this control set, 0 if absent.
  double angle(Mask controls) const;

  // Dense angle vector of length 2^n (absent gates are 0).
  std::vector<double> dense_angles() const;

  friend bool operator==(const RotationCircuit&, const RotationCircuit&) = default;

 private:
  RegisterSpec register_;
  std::vector<RotationGate> gates_;
};

// Merges duplicate control sets by angle addition (in input order), drops
// gates with |theta| <= zero_tol and sorts by mask.
RotationCircuit canonicalize(RegisterSpec reg, std::span<const RotationGate> gates,
                             double zero_tol = 0.0);
RotationCircuit canonicalize(const RotationCircuit& circuit, double zero_tol = 0.0);

CostReport cost_report(const RotationCircuit& circuit);
CostReport cost_report(std::span<const RotationGate> gates);

}  // namespace rotcc
