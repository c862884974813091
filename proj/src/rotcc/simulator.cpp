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

#include "rotcc/simulator.hpp"

#include <cmath>

#include "rotcc/error.hpp"
#include "rotcc/subset_transform.hpp"

namespace rotcc {

double evaluate(const RotationCircuit& circuit, Mask mask) {
  double acc = 0.0;
  for (const auto& g : circuit.gates()) {
    if (is_subset(g.controls, mask)) acc += g.theta;
  }
  return acc;
}

std::vector<double> evaluate_all(const RotationCircuit& circuit, SimulationMode mode) {
  if (mode == SimulationMode::kFast) {
    std::vector<double> values = circuit.dense_angles();
    zeta_transform(values);
    return values;
  }
  std::vector<double> values(circuit.reg().state_count());
  for (std::size_t m = 0; m < values.size(); ++m) {
    values[m] = evaluate(circuit, static_cast<Mask>(m));
  }
  return values;
}

ErrorReport error_metrics(const RotationCircuit& circuit, const LookupTable& target,
                          SimulationMode mode) {
  if (!(circuit.reg() == target.reg)) {
    fail(ErrorCode::kInvalidArgument, "circuit and target use different registers");
  }
  const std::vector<double> simulated = evaluate_all(circuit, mode);
  ErrorReport report;
  report.excluded = target.excluded;
  auto next_excluded = report.excluded.begin();
  double sum = 0.0;
  for (std::size_t m = 0; m < simulated.size(); ++m) {
    if (next_excluded != report.excluded.end() && *next_excluded == m) {
      ++next_excluded;
      continue;
    }
    const double err = std::abs(target.angles[m] - simulated[m]);
    sum += err;
    if (report.samples == 0 || err > report.max_error) {
      report.max_error = err;
      report.argmax_mask = static_cast<Mask>(m);
    }
    ++report.samples;
  }
  if (report.samples == 0) {
    fail(ErrorCode::kDomain, "every input is excluded; no error can be measured");
  }
  report.avg_error = sum / static_cast<double>(report.samples);
  report.argmax_value = circuit.reg().value_of(report.argmax_mask);
  return report;
}

ErrorReport error_metrics(const RotationCircuit& circuit, const FunctionSpec& f,
                          SimulationMode mode) {
  return error_metrics(circuit, compile_lut(f, circuit.reg()), mode);
}

double taylor_baseline(const RegisterSpec& reg) {
  double worst = 0.0;
  for (std::size_t m = 0; m < reg.state_count(); ++m) {
    const double x = reg.value_of(static_cast<Mask>(m));
    if (std::abs(x) > 1.0) {
      fail(ErrorCode::kDomain, "register value " + format_double(x) + " is outside [-1, 1]");
    }
    worst = std::max(worst, std::abs(std::asin(x) - x));
  }
  return worst;
}

Amplitudes rotation_amplitudes(double theta) {
  return {std::cos(theta / 2.0), std::sin(theta / 2.0)};
}

}  // namespace rotcc
