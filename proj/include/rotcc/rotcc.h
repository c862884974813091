/*
 * Copyright 2026 The rotcc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * rotcc: compiler for approximate multi-controlled rotation circuits.
 *
 * Every fallible call returns a rotcc_status; on failure rotcc_last_error()
 * describes the problem for the calling thread. Objects are opaque handles
 * owned by the caller and released with the matching *_destroy function.
 * Accessors returning `const` handles hand out borrowed views that stay valid
 * while the owning object lives. Strings returned through `char **` are
 * released with rotcc_string_free().
 *
 * Array outputs take a caller buffer and its capacity (in elements); a
 * capacity smaller than the required size fails with
 * ROTCC_ERR_INVALID_ARGUMENT.
 */
#ifndef ROTCC_ROTCC_H
#define ROTCC_ROTCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(ROTCC_BUILDING_LIBRARY)
#define ROTCC_API __attribute__((visibility("default")))
#else
#define ROTCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rotcc_status {
  ROTCC_OK = 0,
  ROTCC_ERR_INVALID_ARGUMENT = 1,
  ROTCC_ERR_COMPILE_GUARD = 2,
  ROTCC_ERR_DOMAIN = 3,
  ROTCC_ERR_UNDEFINED_VALUE = 4,
  ROTCC_ERR_PARSE = 5,
  ROTCC_ERR_IO = 6,
  ROTCC_ERR_OUT_OF_MEMORY = 7,
  ROTCC_ERR_INTERNAL = 8
} rotcc_status;

/* Bit i set <=> argument qubit i is |1>. */
typedef uint32_t rotcc_mask;

typedef struct rotcc_register rotcc_register;
typedef struct rotcc_function rotcc_function;
typedef struct rotcc_table rotcc_table;
typedef struct rotcc_circuit rotcc_circuit;
typedef struct rotcc_approximation rotcc_approximation;
typedef struct rotcc_error_report rotcc_error_report;
typedef struct rotcc_document rotcc_document;
typedef struct rotcc_sweep rotcc_sweep;

typedef enum rotcc_undefined_policy {
  ROTCC_UNDEFINED_ZERO_AND_EXCLUDE = 0,
  ROTCC_UNDEFINED_REJECT = 1
} rotcc_undefined_policy;

typedef enum rotcc_rank_order {
  ROTCC_RANK_CONTRIBUTION_TO_COST = 0,
  ROTCC_RANK_ABSOLUTE_ANGLE = 1
} rotcc_rank_order;

typedef enum rotcc_sim_mode {
  ROTCC_SIM_FAST = 0,
  ROTCC_SIM_ACCUMULATOR = 1
} rotcc_sim_mode;

typedef enum rotcc_budget_kind {
  ROTCC_BUDGET_NONE = 0,
  ROTCC_BUDGET_TOFFOLI = 1,
  ROTCC_BUDGET_ERROR = 2
} rotcc_budget_kind;

typedef enum rotcc_circuit_source {
  ROTCC_SOURCE_LOOKUP_TABLE = 0,
  ROTCC_SOURCE_POLYNOMIAL = 1
} rotcc_circuit_source;

typedef struct rotcc_gate {
  rotcc_mask controls;
  double theta;
} rotcc_gate;

typedef struct rotcc_ranked_gate {
  rotcc_mask controls;
  double theta;
  double ratio;
} rotcc_ranked_gate;

typedef struct rotcc_cost_report {
  uint64_t gate_count;
  uint64_t toffoli_count;
  uint64_t ancilla_count;
  int max_controls;
} rotcc_cost_report;

typedef struct rotcc_predicted_counts {
  uint64_t rotation_gates;
  uint64_t ancilla;
  uint64_t toffoli;
} rotcc_predicted_counts;

typedef struct rotcc_approximation_info {
  rotcc_budget_kind budget_kind;
  double budget;
  double bound;
  uint64_t omitted;
} rotcc_approximation_info;

typedef struct rotcc_error_summary {
  double max_error;
  double avg_error;
  rotcc_mask argmax_mask;
  double argmax_value;
  size_t samples;
  size_t excluded_count;
} rotcc_error_summary;

/* ---- errors and strings ------------------------------------------------ */

ROTCC_API const char *rotcc_last_error(void);
ROTCC_API const char *rotcc_status_name(rotcc_status status);
ROTCC_API const char *rotcc_version(void);
ROTCC_API void rotcc_string_free(char *text);

/* ---- registers ----------------------------------------------------------- */

/* Register size limit (24 unless ROTCC_MAX_N overrides it). */
ROTCC_API size_t rotcc_max_register_size(void);

ROTCC_API rotcc_status rotcc_register_create(const double *weights, size_t n, const char *label,
                                             rotcc_register **out);
/* Weights [-a, a/2, ..., a/2^(n-1)] covering [-a, a). */
ROTCC_API rotcc_status rotcc_register_twos_complement(size_t n, double half_range,
                                                      const char *label, rotcc_register **out);
ROTCC_API void rotcc_register_destroy(rotcc_register *reg);
ROTCC_API size_t rotcc_register_size(const rotcc_register *reg);
ROTCC_API const char *rotcc_register_label(const rotcc_register *reg);
ROTCC_API rotcc_status rotcc_register_weights(const rotcc_register *reg, double *out,
                                              size_t capacity);
ROTCC_API rotcc_status rotcc_register_value(const rotcc_register *reg, rotcc_mask mask,
                                            double *out);

/* ---- target functions ---------------------------------------------------- */

/* arcsin | asin | asin-recip | sin | exp | pow:D | poly:a0,a1,... | expr:<x, n> */
ROTCC_API rotcc_status rotcc_function_parse(const char *text, rotcc_function **out);

/* Pure real-to-real callback; non-finite results count as undefined. */
typedef double (*rotcc_callback)(double x, size_t n, void *user_data);
ROTCC_API rotcc_status rotcc_function_from_callback(const char *name, rotcc_callback fn,
                                                    void *user_data, rotcc_function **out);
ROTCC_API rotcc_status rotcc_function_set_policy(rotcc_function *fn,
                                                 rotcc_undefined_policy policy);
ROTCC_API const char *rotcc_function_name(const rotcc_function *fn);
ROTCC_API void rotcc_function_destroy(rotcc_function *fn);

/* ---- circuits ------------------------------------------------------------ */

ROTCC_API uint64_t rotcc_toffoli_cost(int controls);

/* Builds a circuit from a gate multiset: duplicates merge by addition and
 * gates with |theta| <= zero_tol are dropped. */
ROTCC_API rotcc_status rotcc_circuit_create(const rotcc_register *reg, const rotcc_gate *gates,
                                            size_t count, double zero_tol, rotcc_circuit **out);
ROTCC_API rotcc_status rotcc_circuit_canonicalize(const rotcc_circuit *circuit, double zero_tol,
                                                  rotcc_circuit **out);
ROTCC_API void rotcc_circuit_destroy(rotcc_circuit *circuit);
ROTCC_API const rotcc_register *rotcc_circuit_register(const rotcc_circuit *circuit);
/* Number of stored gates, zero angles included. */
ROTCC_API size_t rotcc_circuit_gate_count(const rotcc_circuit *circuit);
/* Gates in ascending mask order. */
ROTCC_API rotcc_status rotcc_circuit_gates(const rotcc_circuit *circuit, rotcc_gate *out,
                                           size_t capacity);
ROTCC_API rotcc_status rotcc_circuit_cost(const rotcc_circuit *circuit, rotcc_cost_report *out);

/* ---- polynomial compiler ------------------------------------------------- */

/* max_tuples bounds n^degree; 0 selects the default of 1e9. */
ROTCC_API rotcc_status rotcc_compile_polynomial(const double *coefficients, size_t count,
                                                const rotcc_register *reg, uint64_t max_tuples,
                                                rotcc_circuit **out);
ROTCC_API rotcc_status rotcc_predict_counts(size_t n, size_t degree,
                                            rotcc_predicted_counts *out);

/* ---- lookup tables ------------------------------------------------------- */

ROTCC_API rotcc_status rotcc_compile_lut(const rotcc_function *fn, const rotcc_register *reg,
                                         rotcc_table **out);
ROTCC_API void rotcc_table_destroy(rotcc_table *table);
ROTCC_API size_t rotcc_table_size(const rotcc_table *table);
ROTCC_API rotcc_status rotcc_table_angles(const rotcc_table *table, double *out,
                                          size_t capacity);
ROTCC_API size_t rotcc_table_excluded_count(const rotcc_table *table);
ROTCC_API rotcc_status rotcc_table_excluded(const rotcc_table *table, rotcc_mask *out,
                                            size_t capacity);
/* Subset-firing circuit with all 2^n gates, zero angles included. */
ROTCC_API rotcc_status rotcc_transform_lut(const rotcc_table *table, rotcc_circuit **out);
ROTCC_API rotcc_status rotcc_table_to_json(const rotcc_table *table, const char *source_function,
                                           char **out);

/* ---- approximation ------------------------------------------------------- */

/* With out == NULL only *count is written. */
ROTCC_API rotcc_status rotcc_rank_gates(const rotcc_circuit *circuit, rotcc_rank_order order,
                                        rotcc_ranked_gate *out, size_t capacity, size_t *count);
ROTCC_API rotcc_status rotcc_truncate_to_toffoli_budget(const rotcc_circuit *circuit,
                                                        int64_t budget, rotcc_rank_order order,
                                                        rotcc_approximation **out);
ROTCC_API rotcc_status rotcc_truncate_to_error_budget(const rotcc_circuit *circuit, double eps,
                                                      rotcc_rank_order order,
                                                      rotcc_approximation **out);
ROTCC_API void rotcc_approximation_destroy(rotcc_approximation *approx);
ROTCC_API const rotcc_circuit *rotcc_approximation_kept(const rotcc_approximation *approx);
ROTCC_API double rotcc_approximation_bound(const rotcc_approximation *approx);
ROTCC_API size_t rotcc_approximation_omitted_count(const rotcc_approximation *approx);
/* Omitted gates in omission order. */
ROTCC_API rotcc_status rotcc_approximation_omitted(const rotcc_approximation *approx,
                                                   rotcc_gate *out, size_t capacity);
ROTCC_API double rotcc_worst_case_bound(const rotcc_gate *gates, size_t count);

/* ---- simulation ---------------------------------------------------------- */

ROTCC_API rotcc_status rotcc_evaluate(const rotcc_circuit *circuit, rotcc_mask mask,
                                      double *out);
ROTCC_API rotcc_status rotcc_evaluate_all(const rotcc_circuit *circuit, rotcc_sim_mode mode,
                                          double *out, size_t capacity);
ROTCC_API rotcc_status rotcc_error_metrics(const rotcc_circuit *circuit,
                                           const rotcc_function *fn, rotcc_sim_mode mode,
                                           rotcc_error_report **out);
ROTCC_API void rotcc_error_report_destroy(rotcc_error_report *report);
ROTCC_API void rotcc_error_report_summary(const rotcc_error_report *report,
                                          rotcc_error_summary *out);
ROTCC_API rotcc_status rotcc_error_report_excluded(const rotcc_error_report *report,
                                                   rotcc_mask *out, size_t capacity);
ROTCC_API rotcc_status rotcc_taylor_baseline(const rotcc_register *reg, double *out);
ROTCC_API void rotcc_rotation_amplitudes(double theta, double *zero, double *one);

/* ---- serialization ------------------------------------------------------- */

/* approximation may be NULL. */
ROTCC_API rotcc_status rotcc_circuit_to_json(const rotcc_circuit *circuit,
                                             const char *source_function,
                                             const rotcc_approximation_info *approximation,
                                             char **out);
ROTCC_API rotcc_status rotcc_circuit_from_json(const char *text, rotcc_document **out);
ROTCC_API void rotcc_document_destroy(rotcc_document *doc);
ROTCC_API const rotcc_circuit *rotcc_document_circuit(const rotcc_document *doc);
ROTCC_API const char *rotcc_document_source_function(const rotcc_document *doc);
/* Returns 1 and fills *out when the document records an approximation. */
ROTCC_API int rotcc_document_approximation(const rotcc_document *doc,
                                           rotcc_approximation_info *out);
ROTCC_API rotcc_status rotcc_circuit_to_qasm(const rotcc_circuit *circuit, char **out);

/* ---- sweeps -------------------------------------------------------------- */

typedef struct rotcc_sweep_config {
  const rotcc_function *function;
  const size_t *sizes;
  size_t size_count;
  /* Two's complement over [-half_range, half_range) unless weights is set. */
  double half_range;
  const double *weights;
  size_t weight_count;
  const char *label;
  rotcc_budget_kind budget_kind;
  /* Numbers, "full" or "full-K" (relative to the exact Toffoli count). */
  const char *const *budgets;
  size_t budget_count;
  rotcc_circuit_source source;
  rotcc_rank_order order;
  rotcc_sim_mode mode;
} rotcc_sweep_config;

typedef struct rotcc_sweep_row {
  const char *function; /* borrowed from the sweep */
  size_t n;
  double budget;
  rotcc_cost_report cost;
  double bound;
  double max_error;
  double avg_error;
} rotcc_sweep_row;

ROTCC_API rotcc_status rotcc_sweep_run(const rotcc_sweep_config *config, rotcc_sweep **out);
ROTCC_API void rotcc_sweep_destroy(rotcc_sweep *sweep);
ROTCC_API size_t rotcc_sweep_row_count(const rotcc_sweep *sweep);
ROTCC_API rotcc_status rotcc_sweep_row_at(const rotcc_sweep *sweep, size_t index,
                                          rotcc_sweep_row *out);
/* Header function,n,budget,toffoli,ancilla,gate_count,bound,max_error,avg_error */
ROTCC_API rotcc_status rotcc_sweep_to_csv(const rotcc_sweep *sweep, char **out);

#ifdef __cplusplus
}
#endif

#endif /* ROTCC_ROTCC_H */
