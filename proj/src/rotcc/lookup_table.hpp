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

#include <vector>

#include "rotcc/circuit.hpp"
#include "rotcc/function.hpp"
#include "rotcc/register.hpp"

namespace rotcc {

// Canonical lookup table: on basis input m only angles[m] is applied.
struct LookupTable {
  RegisterSpec reg;
  std::vector<double> angles;
  // Inputs where the function was undefined (angle set to 0), ascending.
  std::vector<Mask> excluded;
};

// angles[m] = f(value_of(m)). Throws kDomain for arguments outside the
// function's domain and kUndefinedValue for poles under UndefinedPolicy::kReject.
LookupTable compile_lut(const FunctionSpec& f, const RegisterSpec& reg);

// Re-expresses the table in subset-firing form. The result holds all 2^n
// gates, zero angles included; filter with canonicalize().
RotationCircuit transform_lut(const LookupTable& table);

}  // namespace rotcc
