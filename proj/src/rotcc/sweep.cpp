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

#include "rotcc/sweep.hpp"

#include <charconv>
#include <cmath>

#include "rotcc/error.hpp"
#include "rotcc/lookup_table.hpp"
#include "rotcc/polynomial.hpp"

namespace rotcc {

RegisterSpec RegisterLayout::build(std::size_t n) const {
  if (weights.empty()) return RegisterSpec::twos_complement(n, half_range, label);
  if (weights.size() != n) {
    fail(ErrorCode::kInvalidArgument, "explicit weights describe " +
                                          std::to_string(weights.size()) +
                                          " qubits but n = " + std::to_string(n));
  }
  return RegisterSpec(weights, label);
}

double BudgetSpec::resolve(std::uint64_t full_toffoli) const {
  if (!relative_to_full) return value;
  return std::max(0.0, static_cast<double>(full_toffoli) - value);
}

BudgetSpec parse_budget(std::string_view text) {
  BudgetSpec spec;
  if (text.starts_with("full")) {
    spec.relative_to_full = true;
    text.remove_prefix(4);
    if (text.empty()) return spec;
    if (text.front() != '-') fail(ErrorCode::kParse, "budget must look like full-K");
    text.remove_prefix(1);
  }
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), spec.value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() ||
      !(spec.value >= 0.0)) {
    fail(ErrorCode::kParse, "malformed budget '" + std::string(text) + "'");
  }
  return spec;
}

RotationCircuit compile_exact(const FunctionSpec& f, const RegisterSpec& reg,
                              CircuitSource source) {
  if (source == CircuitSource::kPolynomial) {
    auto p = f.as_polynomial();
    if (!p) fail(ErrorCode::kInvalidArgument, f.name() + " is not a polynomial");
    return compile_polynomial(*p, reg);
  }
  return transform_lut(compile_lut(f, reg));
}

ApproximationResult approximate(const RotationCircuit& circuit, BudgetKind kind, double budget,
                                RankOrder order) {
  switch (kind) {
    case BudgetKind::kToffoli:
      if (!(budget >= 0.0) || budget != std::floor(budget)) {
        fail(ErrorCode::kInvalidArgument, "Toffoli budget must be a non-negative integer");
      }
      return truncate_to_toffoli_budget(circuit, static_cast<std::int64_t>(budget), order);
    case BudgetKind::kError:
      return truncate_to_error_budget(circuit, budget, order);
    case BudgetKind::kNone:
      break;
  }
  return {circuit, {}, 0.0, cost_report(circuit)};
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  for (std::size_t n : config.sizes) {
    std::string where = "n=" + std::to_string(n);
    try {
      const RegisterSpec reg = config.layout.build(n);
      const LookupTable target = compile_lut(config.function, reg);
      const RotationCircuit exact =
          config.source == CircuitSource::kLookupTable
              ? transform_lut(target)
              : compile_exact(config.function, reg, config.source);
      const std::uint64_t full = cost_report(exact).toffoli_count;
      for (const auto& spec : config.budgets) {
        const double budget = spec.resolve(full);
        where = "n=" + std::to_string(n) + ", budget=" + format_double(budget);
        const auto result = approximate(exact, config.budget_kind, budget, config.order);
        const auto report = error_metrics(result.kept, target, config.mode);
        rows.push_back({config.function.name(), n, budget, result.cost, result.bound,
                        report.max_error, report.avg_error});
      }
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace rotcc
