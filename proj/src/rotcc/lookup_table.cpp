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

#include "rotcc/lookup_table.hpp"

#include "rotcc/error.hpp"
#include "rotcc/subset_transform.hpp"

namespace rotcc {

LookupTable compile_lut(const FunctionSpec& f, const RegisterSpec& reg) {
  LookupTable table{reg, std::vector<double>(reg.state_count(), 0.0), {}};
  for (std::size_t m = 0; m < table.angles.size(); ++m) {
    const Mask mask = static_cast<Mask>(m);
    const double x = reg.value_of(mask);
    const Evaluation e = f.evaluate(x, reg.size());
    switch (e.status) {
      case Evaluation::Status::kOk:
        table.angles[m] = e.value;
        break;
      case Evaluation::Status::kOutOfDomain:
        fail(ErrorCode::kDomain, f.name() + " is not defined for register value " +
                                     format_double(x) + " (mask " + std::to_string(m) + ")");
      case Evaluation::Status::kUndefined:
        if (f.policy() == UndefinedPolicy::kReject) {
          fail(ErrorCode::kUndefinedValue, f.name() + " is undefined at register value " +
                                               format_double(x) + " (mask " +
                                               std::to_string(m) + ")");
        }
        table.excluded.push_back(mask);
        break;
    }
  }
  return table;
}

RotationCircuit transform_lut(const LookupTable& table) {
  if (table.angles.size() != table.reg.state_count()) {
    fail(ErrorCode::kInvalidArgument, "lookup table must have 2^n angles");
  }
  std::vector<double> thetas = table.angles;
  mobius_transform(thetas);
  return RotationCircuit::from_dense(table.reg, std::move(thetas));
}

}  // namespace rotcc
