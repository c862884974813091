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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotcc/circuit.hpp"
#include "rotcc/lookup_table.hpp"

namespace rotcc {

inline constexpr int kCircuitSchemaVersion = 1;

enum class BudgetKind { kNone, kToffoli, kError };

std::string_view to_string(BudgetKind kind);
BudgetKind parse_budget_kind(std::string_view text);

struct ApproximationInfo {
  BudgetKind budget_kind = BudgetKind::kNone;
  double budget = 0.0;
  double bound = 0.0;
  std::uint64_t omitted = 0;

  friend bool operator==(const ApproximationInfo&, const ApproximationInfo&) = default;
};

struct CircuitMetadata {
  std::string source_function;
  std::optional<ApproximationInfo> approximation;

  friend bool operator==(const CircuitMetadata&, const CircuitMetadata&) = default;
};

struct CircuitDocument {
  RotationCircuit circuit;
  CircuitMetadata metadata;
};

// Canonical JSON: gates ordered by (|controls|, mask), every real written as
// a shortest round-trip decimal plus a hex-float twin that parsing prefers.
std::string serialize_circuit(const RotationCircuit& circuit,
                              const CircuitMetadata& metadata = {});
CircuitDocument parse_circuit(std::string_view json);

// Dense table dump (angles indexed by mask).
std::string serialize_table(const LookupTable& table, std::string_view source_function);

// OpenQASM 3 program. k-controlled gates (k >= 2) expand into a ccx ladder
// over k-1 shared ancillas around a singly controlled ry, uncomputed after
// each gate. Zero-angle gates are skipped.
std::string export_qasm(const RotationCircuit& circuit);

struct SweepRow {
  std::string function;
  std::size_t n = 0;
  double budget = 0.0;
  CostReport cost;
  double bound = 0.0;
  double max_error = 0.0;
  double avg_error = 0.0;
};

inline constexpr std::string_view kSweepCsvHeader =
    "function,n,budget,toffoli,ancilla,gate_count,bound,max_error,avg_error";

// Rows are ordered by n, then ascending budget; LF line endings.
std::string export_sweep_csv(std::vector<SweepRow> rows);

std::string format_hex(double v);
double parse_hex(std::string_view text);

}  // namespace rotcc
