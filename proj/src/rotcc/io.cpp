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

#include "rotcc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "rotcc/error.hpp"
#include "rotcc/function.hpp"

namespace rotcc {

using Json = nlohmann::ordered_json;

std::string_view to_string(BudgetKind kind) {
  switch (kind) {
    case BudgetKind::kNone: return "none";
    case BudgetKind::kToffoli: return "toffoli";
    case BudgetKind::kError: return "error";
  }
  return "none";
}

BudgetKind parse_budget_kind(std::string_view text) {
  if (text == "none") return BudgetKind::kNone;
  if (text == "toffoli") return BudgetKind::kToffoli;
  if (text == "error") return BudgetKind::kError;
  fail(ErrorCode::kParse, "unknown budget kind '" + std::string(text) + "'");
}

std::string format_hex(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, std::abs(v), std::chars_format::hex);
  return (std::signbit(v) ? "-0x" : "0x") + std::string(buf, end);
}

double parse_hex(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v,
                                   std::chars_format::hex);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    fail(ErrorCode::kParse, "malformed hex float '" + std::string(text) + "'");
  }
  return negative ? -v : v;
}

namespace {

Json cost_json(const CostReport& cost) {
  return Json{{"gate_count", cost.gate_count},
              {"toffoli_count", cost.toffoli_count},
              {"ancilla_count", cost.ancilla_count},
              {"max_controls", cost.max_controls}};
}

Json register_json(const RegisterSpec& reg) {
  Json weights = Json::array();
  Json weights_hex = Json::array();
  for (double w : reg.weights()) {
    weights.push_back(w);
    weights_hex.push_back(format_hex(w));
  }
  return Json{{"n", reg.size()},
              {"weights", std::move(weights)},
              {"weights_hex", std::move(weights_hex)},
              {"label", reg.label()}};
}

// Reads a real from `obj[key + "_hex"]` when present, else from `obj[key]`.
double read_real(const Json& obj, const std::string& key) {
  if (auto it = obj.find(key + "_hex"); it != obj.end()) {
    return parse_hex(it->get<std::string>());
  }
  if (auto it = obj.find(key); it != obj.end() && it->is_number()) return it->get<double>();
  fail(ErrorCode::kParse, "missing numeric field '" + key + "'");
}

double read_real_at(const Json& values, const Json* hex_values, std::size_t i) {
  if (hex_values != nullptr) return parse_hex(hex_values->at(i).get<std::string>());
  return values.at(i).get<double>();
}

RegisterSpec parse_register(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const Json& weights = j.at("weights");
  const Json* hex = j.contains("weights_hex") ? &j.at("weights_hex") : nullptr;
  if (weights.size() != n || (hex != nullptr && hex->size() != n)) {
    fail(ErrorCode::kParse, "register weight count does not match n");
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = read_real_at(weights, hex, i);
  return RegisterSpec(std::move(w), j.value("label", std::string{}));
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string serialize_circuit(const RotationCircuit& circuit, const CircuitMetadata& metadata) {
  std::vector<RotationGate> ordered(circuit.gates().begin(), circuit.gates().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const RotationGate& a, const RotationGate& b) {
    return control_count(a.controls) < control_count(b.controls);
  });

  Json gates = Json::array();
  for (const auto& g : ordered) {
    Json controls = Json::array();
    for (std::size_t i = 0; i < circuit.reg().size(); ++i) {
      if (g.controls >> i & 1U) controls.push_back(i);
    }
    gates.push_back(Json{{"controls", std::move(controls)},
                         {"theta", g.theta},
                         {"theta_hex", format_hex(g.theta)}});
  }

  Json approximation = nullptr;
  if (metadata.approximation) {
    const auto& a = *metadata.approximation;
    approximation = Json{{"budget_kind", to_string(a.budget_kind)},
                         {"budget", a.budget},
                         {"budget_hex", format_hex(a.budget)},
                         {"bound", a.bound},
                         {"bound_hex", format_hex(a.bound)},
                         {"omitted", a.omitted}};
  }

  Json doc{{"schema_version", kCircuitSchemaVersion},
           {"register", register_json(circuit.reg())},
           {"gates", std::move(gates)},
           {"metadata", Json{{"source_function", metadata.source_function},
                             {"approximation", std::move(approximation)},
                             {"cost", cost_json(cost_report(circuit))}}}};
  return doc.dump(1) + "\n";
}

CircuitDocument parse_circuit(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("circuit JSON: ") + e.what());
  }
  try {
    if (!doc.contains("schema_version")) fail(ErrorCode::kParse, "missing schema_version");
    const int version = doc.at("schema_version").get<int>();
    if (version != kCircuitSchemaVersion) {
      fail(ErrorCode::kParse, "unsupported schema_version " + std::to_string(version));
    }
    RegisterSpec reg = parse_register(doc.at("register"));

    std::vector<RotationGate> gates;
    for (const auto& g : doc.at("gates")) {
      Mask mask = 0;
      long previous = -1;
      for (const auto& c : g.at("controls")) {
        const long index = c.get<long>();
        if (index <= previous || index >= static_cast<long>(reg.size())) {
          fail(ErrorCode::kParse, "control indices must be strictly increasing and < n");
        }
        mask |= Mask{1} << index;
        previous = index;
      }
      gates.push_back({mask, read_real(g, "theta")});
    }
    std::sort(gates.begin(), gates.end(),
              [](const RotationGate& a, const RotationGate& b) { return a.controls < b.controls; });
    for (std::size_t i = 1; i < gates.size(); ++i) {
      if (gates[i - 1].controls == gates[i].controls) {
        fail(ErrorCode::kParse, "duplicate control set in circuit document");
      }
    }

    CircuitMetadata metadata;
    if (auto meta = doc.find("metadata"); meta != doc.end() && meta->is_object()) {
      metadata.source_function = meta->value("source_function", std::string{});
      if (auto a = meta->find("approximation"); a != meta->end() && a->is_object()) {
        metadata.approximation = ApproximationInfo{
            parse_budget_kind(a->at("budget_kind").get<std::string>()), read_real(*a, "budget"),
            read_real(*a, "bound"), a->value("omitted", std::uint64_t{0})};
      }
    }
    return {RotationCircuit(std::move(reg), std::move(gates)), std::move(metadata)};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("circuit JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) fail(ErrorCode::kParse, e.what());
    throw;
  }
}

std::string serialize_table(const LookupTable& table, std::string_view source_function) {
  Json angles = Json::array();
  Json angles_hex = Json::array();
  for (double a : table.angles) {
    angles.push_back(a);
    angles_hex.push_back(format_hex(a));
  }
  Json doc{{"schema_version", kCircuitSchemaVersion},
           {"kind", "lookup_table"},
           {"register", register_json(table.reg)},
           {"source_function", source_function},
           {"excluded", table.excluded},
           {"angles", std::move(angles)},
           {"angles_hex", std::move(angles_hex)}};
  return doc.dump(1) + "\n";
}

std::string export_qasm(const RotationCircuit& circuit) {
  const CostReport cost = cost_report(circuit);
  const std::size_t n = circuit.reg().size();
  std::ostringstream out;
  out << "OPENQASM 3.0;\n"
      << "include \"stdgates.inc\";\n"
      << "// rotation gates: " << cost.gate_count << ", toffoli: " << cost.toffoli_count
      << ", ancilla: " << cost.ancilla_count << "\n"
      << "qubit[" << n << "] x;\n";
  if (cost.ancilla_count > 0) out << "qubit[" << cost.ancilla_count << "] anc;\n";
  out << "qubit target;\n";

  std::vector<std::size_t> controls;
  std::vector<std::string> ladder;
  for (const auto& g : circuit.gates()) {
    if (g.theta == 0.0) continue;
    const std::string angle = format_double(g.theta);
    controls.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (g.controls >> i & 1U) controls.push_back(i);
    }
    if (controls.empty()) {
      out << "ry(" << angle << ") target;\n";
      continue;
    }
    if (controls.size() == 1) {
      out << "ctrl @ ry(" << angle << ") x[" << controls[0] << "], target;\n";
      continue;
    }
    // anc[j] holds the AND of the first j + 2 controls.
    ladder.clear();
    ladder.push_back("ccx x[" + std::to_string(controls[0]) + "], x[" +
                     std::to_string(controls[1]) + "], anc[0];\n");
    for (std::size_t j = 2; j < controls.size(); ++j) {
      ladder.push_back("ccx x[" + std::to_string(controls[j]) + "], anc[" +
                       std::to_string(j - 2) + "], anc[" + std::to_string(j - 1) + "];\n");
    }
    for (const auto& line : ladder) out << line;
    out << "ctrl @ ry(" << angle << ") anc[" << controls.size() - 2 << "], target;\n";
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) out << *it;
  }
  return out.str();
}

std::string export_sweep_csv(std::vector<SweepRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.budget < b.budget;
  });
  std::string csv(kSweepCsvHeader);
  csv += '\n';
  for (const auto& r : rows) {
    csv += csv_field(r.function) + ',' + std::to_string(r.n) + ',' + format_double(r.budget) +
           ',' + std::to_string(r.cost.toffoli_count) + ',' +
           std::to_string(r.cost.ancilla_count) + ',' + std::to_string(r.cost.gate_count) + ',' +
           format_double(r.bound) + ',' + format_double(r.max_error) + ',' +
           format_double(r.avg_error) + '\n';
  }
  return csv;
}

}  // namespace rotcc
