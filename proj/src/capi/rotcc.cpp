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

#include "rotcc/rotcc.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "rotcc/approximator.hpp"
#include "rotcc/circuit.hpp"
#include "rotcc/error.hpp"
#include "rotcc/function.hpp"
#include "rotcc/io.hpp"
#include "rotcc/lookup_table.hpp"
#include "rotcc/polynomial.hpp"
#include "rotcc/simulator.hpp"
#include "rotcc/sweep.hpp"

struct rotcc_register {
  rotcc::RegisterSpec spec;
};

struct rotcc_function {
  rotcc::FunctionSpec spec;
};

struct rotcc_table {
  rotcc::LookupTable table;
};

struct rotcc_circuit {
  explicit rotcc_circuit(rotcc::RotationCircuit c) : circuit(std::move(c)), reg{circuit.reg()} {}
  rotcc::RotationCircuit circuit;
  rotcc_register reg;
};

struct rotcc_approximation {
  explicit rotcc_approximation(rotcc::ApproximationResult r)
      : result(std::move(r)), kept(result.kept) {}
  rotcc::ApproximationResult result;
  rotcc_circuit kept;
};

struct rotcc_error_report {
  rotcc::ErrorReport report;
};

struct rotcc_document {
  explicit rotcc_document(rotcc::CircuitDocument doc)
      : circuit(std::move(doc.circuit)), metadata(std::move(doc.metadata)) {}
  rotcc_circuit circuit;
  rotcc::CircuitMetadata metadata;
};

struct rotcc_sweep {
  std::vector<rotcc::SweepRow> rows;
};

namespace {

thread_local std::string g_last_error;

rotcc_status to_status(rotcc::ErrorCode code) {
  switch (code) {
    case rotcc::ErrorCode::kInvalidArgument: return ROTCC_ERR_INVALID_ARGUMENT;
    case rotcc::ErrorCode::kCompileGuard: return ROTCC_ERR_COMPILE_GUARD;
    case rotcc::ErrorCode::kDomain: return ROTCC_ERR_DOMAIN;
    case rotcc::ErrorCode::kUndefinedValue: return ROTCC_ERR_UNDEFINED_VALUE;
    case rotcc::ErrorCode::kParse: return ROTCC_ERR_PARSE;
    case rotcc::ErrorCode::kIo: return ROTCC_ERR_IO;
  }
  return ROTCC_ERR_INTERNAL;
}

rotcc_status set_error(rotcc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Body>
rotcc_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return ROTCC_OK;
  } catch (const rotcc::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ROTCC_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ROTCC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(ROTCC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) rotcc::fail(rotcc::ErrorCode::kInvalidArgument, message);
}

template <typename T>
void require_handle(const T* p, const char* what) {
  if (p == nullptr) {
    rotcc::fail(rotcc::ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
  }
}

void require_capacity(std::size_t capacity, std::size_t needed) {
  if (capacity < needed) {
    rotcc::fail(rotcc::ErrorCode::kInvalidArgument,
                "output buffer holds " + std::to_string(capacity) + " elements, " +
                    std::to_string(needed) + " required");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rotcc_cost_report to_c(const rotcc::CostReport& c) {
  return {c.gate_count, c.toffoli_count, c.ancilla_count, c.max_controls};
}

rotcc::RankOrder to_cpp(rotcc_rank_order order) {
  require(order == ROTCC_RANK_CONTRIBUTION_TO_COST || order == ROTCC_RANK_ABSOLUTE_ANGLE,
          "unknown rank order");
  return order == ROTCC_RANK_ABSOLUTE_ANGLE ? rotcc::RankOrder::kAbsoluteAngle
                                            : rotcc::RankOrder::kContributionToCost;
}

rotcc::SimulationMode to_cpp(rotcc_sim_mode mode) {
  require(mode == ROTCC_SIM_FAST || mode == ROTCC_SIM_ACCUMULATOR, "unknown simulation mode");
  return mode == ROTCC_SIM_ACCUMULATOR ? rotcc::SimulationMode::kAccumulator
                                       : rotcc::SimulationMode::kFast;
}

rotcc::BudgetKind to_cpp(rotcc_budget_kind kind) {
  switch (kind) {
    case ROTCC_BUDGET_NONE: return rotcc::BudgetKind::kNone;
    case ROTCC_BUDGET_TOFFOLI: return rotcc::BudgetKind::kToffoli;
    case ROTCC_BUDGET_ERROR: return rotcc::BudgetKind::kError;
  }
  rotcc::fail(rotcc::ErrorCode::kInvalidArgument, "unknown budget kind");
}

rotcc_budget_kind to_c(rotcc::BudgetKind kind) {
  switch (kind) {
    case rotcc::BudgetKind::kNone: return ROTCC_BUDGET_NONE;
    case rotcc::BudgetKind::kToffoli: return ROTCC_BUDGET_TOFFOLI;
    case rotcc::BudgetKind::kError: return ROTCC_BUDGET_ERROR;
  }
  return ROTCC_BUDGET_NONE;
}

void copy_gates(std::span<const rotcc::RotationGate> gates, rotcc_gate* out,
                std::size_t capacity) {
  require_capacity(capacity, gates.size());
  require(out != nullptr || gates.empty(), "output buffer must not be NULL");
  for (std::size_t i = 0; i < gates.size(); ++i) out[i] = {gates[i].controls, gates[i].theta};
}

}  // namespace

extern "C" {

const char* rotcc_last_error(void) { return g_last_error.c_str(); }

const char* rotcc_status_name(rotcc_status status) {
  switch (status) {
    case ROTCC_OK: return "ok";
    case ROTCC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ROTCC_ERR_COMPILE_GUARD: return "compile guard exceeded";
    case ROTCC_ERR_DOMAIN: return "domain error";
    case ROTCC_ERR_UNDEFINED_VALUE: return "undefined function value";
    case ROTCC_ERR_PARSE: return "parse error";
    case ROTCC_ERR_IO: return "i/o error";
    case ROTCC_ERR_OUT_OF_MEMORY: return "out of memory";
    case ROTCC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rotcc_version(void) { return "0.1.0"; }

void rotcc_string_free(char* text) { delete[] text; }

size_t rotcc_max_register_size(void) {
  try {
    return rotcc::max_register_size();
  } catch (const rotcc::Error& e) {
    set_error(ROTCC_ERR_INVALID_ARGUMENT, e.what());
    return rotcc::kDefaultMaxQubits;
  }
}

rotcc_status rotcc_register_create(const double* weights, size_t n, const char* label,
                                   rotcc_register** out) {
  return guarded([&] {
    require_handle(out, "out");
    require(weights != nullptr || n == 0, "weights must not be NULL");
    std::vector<double> w(weights, weights + n);
    *out = new rotcc_register{rotcc::RegisterSpec(std::move(w), label ? label : "")};
  });
}

rotcc_status rotcc_register_twos_complement(size_t n, double half_range, const char* label,
                                            rotcc_register** out) {
  return guarded([&] {
    require_handle(out, "out");
    *out = new rotcc_register{
        rotcc::RegisterSpec::twos_complement(n, half_range, label ? label : "")};
  });
}

void rotcc_register_destroy(rotcc_register* reg) { delete reg; }

size_t rotcc_register_size(const rotcc_register* reg) { return reg ? reg->spec.size() : 0; }

const char* rotcc_register_label(const rotcc_register* reg) {
  return reg ? reg->spec.label().c_str() : "";
}

rotcc_status rotcc_register_weights(const rotcc_register* reg, double* out, size_t capacity) {
  return guarded([&] {
    require_handle(reg, "register");
    require_handle(out, "out");
    const auto w = reg->spec.weights();
    require_capacity(capacity, w.size());
    std::copy(w.begin(), w.end(), out);
  });
}

rotcc_status rotcc_register_value(const rotcc_register* reg, rotcc_mask mask, double* out) {
  return guarded([&] {
    require_handle(reg, "register");
    require_handle(out, "out");
    require(reg->spec.contains(mask), "mask exceeds the register");
    *out = reg->spec.value_of(mask);
  });
}

rotcc_status rotcc_function_parse(const char* text, rotcc_function** out) {
  return guarded([&] {
    require_handle(text, "text");
    require_handle(out, "out");
    *out = new rotcc_function{rotcc::FunctionSpec::parse(text)};
  });
}

rotcc_status rotcc_function_from_callback(const char* name, rotcc_callback fn, void* user_data,
                                          rotcc_function** out) {
  return guarded([&] {
    require(fn != nullptr, "callback must not be NULL");
    require_handle(out, "out");
    *out = new rotcc_function{rotcc::FunctionSpec::custom(
        name ? name : "custom",
        [fn, user_data](double x, std::size_t n) { return fn(x, n, user_data); })};
  });
}

rotcc_status rotcc_function_set_policy(rotcc_function* fn, rotcc_undefined_policy policy) {
  return guarded([&] {
    require_handle(fn, "function");
    require(policy == ROTCC_UNDEFINED_REJECT || policy == ROTCC_UNDEFINED_ZERO_AND_EXCLUDE,
            "unknown undefined-value policy");
    fn->spec = fn->spec.with_policy(policy == ROTCC_UNDEFINED_REJECT
                                        ? rotcc::UndefinedPolicy::kReject
                                        : rotcc::UndefinedPolicy::kZeroAndExclude);
  });
}

const char* rotcc_function_name(const rotcc_function* fn) {
  return fn ? fn->spec.name().c_str() : "";
}

void rotcc_function_destroy(rotcc_function* fn) { delete fn; }

uint64_t rotcc_toffoli_cost(int controls) { return rotcc::toffoli_cost(controls); }

rotcc_status rotcc_circuit_create(const rotcc_register* reg, const rotcc_gate* gates,
                                  size_t count, double zero_tol, rotcc_circuit** out) {
  return guarded([&] {
    require_handle(reg, "register");
    require_handle(out, "out");
    require(gates != nullptr || count == 0, "gates must not be NULL");
    std::vector<rotcc::RotationGate> list(count);
    for (std::size_t i = 0; i < count; ++i) list[i] = {gates[i].controls, gates[i].theta};
    *out = new rotcc_circuit(rotcc::canonicalize(reg->spec, list, zero_tol));
  });
}

rotcc_status rotcc_circuit_canonicalize(const rotcc_circuit* circuit, double zero_tol,
                                        rotcc_circuit** out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    *out = new rotcc_circuit(rotcc::canonicalize(circuit->circuit, zero_tol));
  });
}

void rotcc_circuit_destroy(rotcc_circuit* circuit) { delete circuit; }

const rotcc_register* rotcc_circuit_register(const rotcc_circuit* circuit) {
  return circuit ? &circuit->reg : nullptr;
}

size_t rotcc_circuit_gate_count(const rotcc_circuit* circuit) {
  return circuit ? circuit->circuit.size() : 0;
}

rotcc_status rotcc_circuit_gates(const rotcc_circuit* circuit, rotcc_gate* out, size_t capacity) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    copy_gates(circuit->circuit.gates(), out, capacity);
  });
}

rotcc_status rotcc_circuit_cost(const rotcc_circuit* circuit, rotcc_cost_report* out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    *out = to_c(rotcc::cost_report(circuit->circuit));
  });
}

rotcc_status rotcc_compile_polynomial(const double* coefficients, size_t count,
                                      const rotcc_register* reg, uint64_t max_tuples,
                                      rotcc_circuit** out) {
  return guarded([&] {
    require_handle(reg, "register");
    require_handle(out, "out");
    require(coefficients != nullptr || count == 0, "coefficients must not be NULL");
    rotcc::Polynomial p(std::vector<double>(coefficients, coefficients + count));
    rotcc::CompileLimits limits;
    if (max_tuples != 0) limits.max_tuples = max_tuples;
    *out = new rotcc_circuit(rotcc::compile_polynomial(p, reg->spec, limits));
  });
}

rotcc_status rotcc_predict_counts(size_t n, size_t degree, rotcc_predicted_counts* out) {
  return guarded([&] {
    require_handle(out, "out");
    const auto c = rotcc::predict_counts(n, degree);
    *out = {c.rotation_gates, c.ancilla, c.toffoli};
  });
}

rotcc_status rotcc_compile_lut(const rotcc_function* fn, const rotcc_register* reg,
                               rotcc_table** out) {
  return guarded([&] {
    require_handle(fn, "function");
    require_handle(reg, "register");
    require_handle(out, "out");
    *out = new rotcc_table{rotcc::compile_lut(fn->spec, reg->spec)};
  });
}

void rotcc_table_destroy(rotcc_table* table) { delete table; }

size_t rotcc_table_size(const rotcc_table* table) {
  return table ? table->table.angles.size() : 0;
}

rotcc_status rotcc_table_angles(const rotcc_table* table, double* out, size_t capacity) {
  return guarded([&] {
    require_handle(table, "table");
    require_handle(out, "out");
    require_capacity(capacity, table->table.angles.size());
    std::copy(table->table.angles.begin(), table->table.angles.end(), out);
  });
}

size_t rotcc_table_excluded_count(const rotcc_table* table) {
  return table ? table->table.excluded.size() : 0;
}

rotcc_status rotcc_table_excluded(const rotcc_table* table, rotcc_mask* out, size_t capacity) {
  return guarded([&] {
    require_handle(table, "table");
    const auto& excluded = table->table.excluded;
    require_capacity(capacity, excluded.size());
    require(out != nullptr || excluded.empty(), "out must not be NULL");
    std::copy(excluded.begin(), excluded.end(), out);
  });
}

rotcc_status rotcc_transform_lut(const rotcc_table* table, rotcc_circuit** out) {
  return guarded([&] {
    require_handle(table, "table");
    require_handle(out, "out");
    *out = new rotcc_circuit(rotcc::transform_lut(table->table));
  });
}

rotcc_status rotcc_table_to_json(const rotcc_table* table, const char* source_function,
                                 char** out) {
  return guarded([&] {
    require_handle(table, "table");
    require_handle(out, "out");
    *out = copy_string(rotcc::serialize_table(table->table, source_function ? source_function : ""));
  });
}

rotcc_status rotcc_rank_gates(const rotcc_circuit* circuit, rotcc_rank_order order,
                              rotcc_ranked_gate* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(count, "count");
    const auto ranked = rotcc::rank_gates(circuit->circuit, to_cpp(order));
    *count = ranked.size();
    if (out == nullptr) return;
    require_capacity(capacity, ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out[i] = {ranked[i].gate.controls, ranked[i].gate.theta, ranked[i].ratio};
    }
  });
}

rotcc_status rotcc_truncate_to_toffoli_budget(const rotcc_circuit* circuit, int64_t budget,
                                              rotcc_rank_order order,
                                              rotcc_approximation** out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    *out = new rotcc_approximation(
        rotcc::truncate_to_toffoli_budget(circuit->circuit, budget, to_cpp(order)));
  });
}

rotcc_status rotcc_truncate_to_error_budget(const rotcc_circuit* circuit, double eps,
                                            rotcc_rank_order order, rotcc_approximation** out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    *out = new rotcc_approximation(
        rotcc::truncate_to_error_budget(circuit->circuit, eps, to_cpp(order)));
  });
}

void rotcc_approximation_destroy(rotcc_approximation* approx) { delete approx; }

const rotcc_circuit* rotcc_approximation_kept(const rotcc_approximation* approx) {
  return approx ? &approx->kept : nullptr;
}

double rotcc_approximation_bound(const rotcc_approximation* approx) {
  return approx ? approx->result.bound : 0.0;
}

size_t rotcc_approximation_omitted_count(const rotcc_approximation* approx) {
  return approx ? approx->result.omitted.size() : 0;
}

rotcc_status rotcc_approximation_omitted(const rotcc_approximation* approx, rotcc_gate* out,
                                         size_t capacity) {
  return guarded([&] {
    require_handle(approx, "approximation");
    copy_gates(approx->result.omitted, out, capacity);
  });
}

double rotcc_worst_case_bound(const rotcc_gate* gates, size_t count) {
  if (gates == nullptr) return 0.0;
  std::vector<rotcc::RotationGate> list(count);
  for (std::size_t i = 0; i < count; ++i) list[i] = {gates[i].controls, gates[i].theta};
  return rotcc::worst_case_bound(list);
}

rotcc_status rotcc_evaluate(const rotcc_circuit* circuit, rotcc_mask mask, double* out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    require(circuit->circuit.reg().contains(mask), "mask exceeds the register");
    *out = rotcc::evaluate(circuit->circuit, mask);
  });
}

rotcc_status rotcc_evaluate_all(const rotcc_circuit* circuit, rotcc_sim_mode mode, double* out,
                                size_t capacity) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    require_capacity(capacity, circuit->circuit.reg().state_count());
    const auto values = rotcc::evaluate_all(circuit->circuit, to_cpp(mode));
    std::copy(values.begin(), values.end(), out);
  });
}

rotcc_status rotcc_error_metrics(const rotcc_circuit* circuit, const rotcc_function* fn,
                                 rotcc_sim_mode mode, rotcc_error_report** out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(fn, "function");
    require_handle(out, "out");
    *out = new rotcc_error_report{rotcc::error_metrics(circuit->circuit, fn->spec, to_cpp(mode))};
  });
}

void rotcc_error_report_destroy(rotcc_error_report* report) { delete report; }

void rotcc_error_report_summary(const rotcc_error_report* report, rotcc_error_summary* out) {
  if (report == nullptr || out == nullptr) return;
  const auto& r = report->report;
  *out = {r.max_error, r.avg_error, r.argmax_mask, r.argmax_value, r.samples, r.excluded.size()};
}

rotcc_status rotcc_error_report_excluded(const rotcc_error_report* report, rotcc_mask* out,
                                         size_t capacity) {
  return guarded([&] {
    require_handle(report, "report");
    const auto& excluded = report->report.excluded;
    require_capacity(capacity, excluded.size());
    require(out != nullptr || excluded.empty(), "out must not be NULL");
    std::copy(excluded.begin(), excluded.end(), out);
  });
}

rotcc_status rotcc_taylor_baseline(const rotcc_register* reg, double* out) {
  return guarded([&] {
    require_handle(reg, "register");
    require_handle(out, "out");
    *out = rotcc::taylor_baseline(reg->spec);
  });
}

void rotcc_rotation_amplitudes(double theta, double* zero, double* one) {
  const auto a = rotcc::rotation_amplitudes(theta);
  if (zero != nullptr) *zero = a.zero;
  if (one != nullptr) *one = a.one;
}

rotcc_status rotcc_circuit_to_json(const rotcc_circuit* circuit, const char* source_function,
                                   const rotcc_approximation_info* approximation, char** out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    rotcc::CircuitMetadata metadata;
    metadata.source_function = source_function ? source_function : "";
    if (approximation != nullptr) {
      metadata.approximation = rotcc::ApproximationInfo{
          to_cpp(approximation->budget_kind), approximation->budget, approximation->bound,
          approximation->omitted};
    }
    *out = copy_string(rotcc::serialize_circuit(circuit->circuit, metadata));
  });
}

rotcc_status rotcc_circuit_from_json(const char* text, rotcc_document** out) {
  return guarded([&] {
    require_handle(text, "text");
    require_handle(out, "out");
    *out = new rotcc_document(rotcc::parse_circuit(text));
  });
}

void rotcc_document_destroy(rotcc_document* doc) { delete doc; }

const rotcc_circuit* rotcc_document_circuit(const rotcc_document* doc) {
  return doc ? &doc->circuit : nullptr;
}

const char* rotcc_document_source_function(const rotcc_document* doc) {
  return doc ? doc->metadata.source_function.c_str() : "";
}

int rotcc_document_approximation(const rotcc_document* doc, rotcc_approximation_info* out) {
  if (doc == nullptr || !doc->metadata.approximation) return 0;
  if (out != nullptr) {
    const auto& a = *doc->metadata.approximation;
    *out = {to_c(a.budget_kind), a.budget, a.bound, a.omitted};
  }
  return 1;
}

rotcc_status rotcc_circuit_to_qasm(const rotcc_circuit* circuit, char** out) {
  return guarded([&] {
    require_handle(circuit, "circuit");
    require_handle(out, "out");
    *out = copy_string(rotcc::export_qasm(circuit->circuit));
  });
}

rotcc_status rotcc_sweep_run(const rotcc_sweep_config* config, rotcc_sweep** out) {
  return guarded([&] {
    require_handle(config, "config");
    require_handle(config->function, "config->function");
    require_handle(out, "out");
    require(config->sizes != nullptr || config->size_count == 0, "sizes must not be NULL");
    require(config->budgets != nullptr || config->budget_count == 0, "budgets must not be NULL");
    require(config->weights != nullptr || config->weight_count == 0, "weights must not be NULL");

    rotcc::SweepConfig sweep;
    sweep.function = config->function->spec;
    sweep.sizes.assign(config->sizes, config->sizes + config->size_count);
    sweep.layout.half_range = config->half_range;
    sweep.layout.weights.assign(config->weights, config->weights + config->weight_count);
    sweep.layout.label = config->label ? config->label : "";
    sweep.budget_kind = to_cpp(config->budget_kind);
    for (std::size_t i = 0; i < config->budget_count; ++i) {
      require_handle(config->budgets[i], "budget");
      sweep.budgets.push_back(rotcc::parse_budget(config->budgets[i]));
    }
    require(config->source == ROTCC_SOURCE_LOOKUP_TABLE ||
                config->source == ROTCC_SOURCE_POLYNOMIAL,
            "unknown circuit source");
    sweep.source = config->source == ROTCC_SOURCE_POLYNOMIAL
                       ? rotcc::CircuitSource::kPolynomial
                       : rotcc::CircuitSource::kLookupTable;
    sweep.order = to_cpp(config->order);
    sweep.mode = to_cpp(config->mode);
    *out = new rotcc_sweep{rotcc::run_sweep(sweep)};
  });
}

void rotcc_sweep_destroy(rotcc_sweep* sweep) { delete sweep; }

size_t rotcc_sweep_row_count(const rotcc_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

rotcc_status rotcc_sweep_row_at(const rotcc_sweep* sweep, size_t index, rotcc_sweep_row* out) {
  return guarded([&] {
    require_handle(sweep, "sweep");
    require_handle(out, "out");
    require(index < sweep->rows.size(), "row index out of range");
    const auto& r = sweep->rows[index];
    *out = {r.function.c_str(), r.n, r.budget, to_c(r.cost), r.bound, r.max_error, r.avg_error};
  });
}

rotcc_status rotcc_sweep_to_csv(const rotcc_sweep* sweep, char** out) {
  return guarded([&] {
    require_handle(sweep, "sweep");
    require_handle(out, "out");
    *out = copy_string(rotcc::export_sweep_csv(sweep->rows));
  });
}

}  // extern "C"
