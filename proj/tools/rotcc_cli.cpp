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

#include <rotcc/rotcc.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kInternal = 1, kConfig = 2, kGuard = 3, kDomain = 4 };

class Failure : public std::runtime_error {
 public:
  Failure(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

int exit_code_for(rotcc_status status) {
  switch (status) {
    case ROTCC_OK: return kOk;
    case ROTCC_ERR_INVALID_ARGUMENT:
    case ROTCC_ERR_PARSE:
    case ROTCC_ERR_IO: return kConfig;
    case ROTCC_ERR_COMPILE_GUARD: return kGuard;
    case ROTCC_ERR_DOMAIN:
    case ROTCC_ERR_UNDEFINED_VALUE: return kDomain;
    default: return kInternal;
  }
}

void check(rotcc_status status) {
  if (status != ROTCC_OK) {
    throw Failure(exit_code_for(status),
                  std::string(rotcc_status_name(status)) + ": " + rotcc_last_error());
  }
}

[[noreturn]] void config_error(const std::string& message) { throw Failure(kConfig, message); }

template <auto Destroy>
struct Deleter {
  template <typename T>
  void operator()(T* p) const {
    Destroy(p);
  }
};

using Register = std::unique_ptr<rotcc_register, Deleter<rotcc_register_destroy>>;
using Function = std::unique_ptr<rotcc_function, Deleter<rotcc_function_destroy>>;
using Table = std::unique_ptr<rotcc_table, Deleter<rotcc_table_destroy>>;
using Circuit = std::unique_ptr<rotcc_circuit, Deleter<rotcc_circuit_destroy>>;
using Approximation =
    std::unique_ptr<rotcc_approximation, Deleter<rotcc_approximation_destroy>>;
using Report = std::unique_ptr<rotcc_error_report, Deleter<rotcc_error_report_destroy>>;
using Document = std::unique_ptr<rotcc_document, Deleter<rotcc_document_destroy>>;
using Sweep = std::unique_ptr<rotcc_sweep, Deleter<rotcc_sweep_destroy>>;

std::string take_string(char* text) {
  std::string s(text);
  rotcc_string_free(text);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) config_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) config_error("cannot write " + path);
  out << content;
  out.flush();
  if (!out) config_error("failed writing " + path);
}

std::string number(double v) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, result.ptr);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end || begin == end) {
    config_error("invalid " + what + " '" + text + "'");
  }
  return value;
}

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_number(part, what));
  if (values.empty()) config_error("empty " + what + " list");
  return values;
}

struct RegisterOptions {
  std::string n_text = "8";
  std::string range = "-0.5:0.5";
  std::string weights;
  std::string label;
  bool n_given = false;
  bool range_given = false;

  void add_to(CLI::App& app) {
    app.add_option("--n", n_text, "Argument register size")
        ->each([this](const std::string&) { n_given = true; });
    app.add_option("--range", range, "Two's-complement range -a:a")
        ->each([this](const std::string&) { range_given = true; });
    app.add_option("--weights", weights, "Explicit per-qubit weights, comma separated");
    app.add_option("--label", label, "Register label");
  }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& part : split(n_text, ',')) {
      const double v = parse_number(part, "register size");
      if (v < 1 || v > 64 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        config_error("invalid register size '" + part + "'");
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) config_error("no register size given");
    return out;
  }

  std::size_t size() const {
    const auto all = sizes();
    if (all.size() != 1) config_error("a single register size is required here");
    return all.front();
  }

  bool given() const { return n_given || range_given || !weights.empty(); }

  double half_range() const {
    const auto parts = split(range, ':');
    if (parts.size() != 2) config_error("range must look like -a:a, got '" + range + "'");
    const double lo = parse_number(parts[0], "range bound");
    const double hi = parse_number(parts[1], "range bound");
    if (!(hi > 0.0) || lo != -hi) {
      config_error("two's-complement range must be symmetric [-a, a), got '" + range + "'");
    }
    return hi;
  }

  std::string resolved_label() const {
    if (!label.empty()) return label;
    if (!weights.empty()) return "custom";
    return "[" + number(-half_range()) + "," + number(half_range()) + ")";
  }

  Register build() const {
    rotcc_register* reg = nullptr;
    if (!weights.empty()) {
      const auto w = parse_numbers(weights, "weight");
      if (n_given && w.size() != size()) {
        config_error("--n " + n_text + " disagrees with " +
                     std::to_string(w.size()) + " weights");
      }
      check(rotcc_register_create(w.data(), w.size(), resolved_label().c_str(), &reg));
    } else {
      check(rotcc_register_twos_complement(size(), half_range(), resolved_label().c_str(), &reg));
    }
    return Register(reg);
  }
};

struct OutputOptions {
  std::string out;
  std::string qasm;
  bool json = false;
};

rotcc_rank_order parse_order(const std::string& text) {
  if (text == "ratio") return ROTCC_RANK_CONTRIBUTION_TO_COST;
  if (text == "angle") return ROTCC_RANK_ABSOLUTE_ANGLE;
  config_error("unknown rank order '" + text + "'");
}

rotcc_sim_mode parse_mode(const std::string& text) {
  if (text == "fast") return ROTCC_SIM_FAST;
  if (text == "accumulator") return ROTCC_SIM_ACCUMULATOR;
  config_error("unknown simulation mode '" + text + "'");
}

Function make_function(const std::string& text, const std::string& policy) {
  rotcc_function* fn = nullptr;
  check(rotcc_function_parse(text.c_str(), &fn));
  Function owned(fn);
  if (policy == "reject") {
    check(rotcc_function_set_policy(fn, ROTCC_UNDEFINED_REJECT));
  } else if (policy == "zero") {
    check(rotcc_function_set_policy(fn, ROTCC_UNDEFINED_ZERO_AND_EXCLUDE));
  } else {
    config_error("unknown undefined-value policy '" + policy + "'");
  }
  return owned;
}

rotcc_cost_report cost_of(const rotcc_circuit* circuit) {
  rotcc_cost_report cost{};
  check(rotcc_circuit_cost(circuit, &cost));
  return cost;
}

Json cost_json(const rotcc_cost_report& cost) {
  return Json{{"gate_count", cost.gate_count},
              {"toffoli", cost.toffoli_count},
              {"ancilla", cost.ancilla_count},
              {"max_controls", cost.max_controls}};
}

void print_summary(const Json& summary, bool as_json) {
  if (as_json) {
    std::cout << summary.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : summary.items()) {
    if (value.is_object()) {
      for (const auto& [inner, v] : value.items()) {
        std::cout << key << '.' << inner << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << '\n';
      }
    } else {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
    }
  }
}

void emit_circuit(const rotcc_circuit* circuit, const std::string& source,
                  const rotcc_approximation_info* info, const OutputOptions& output) {
  if (!output.out.empty()) {
    char* text = nullptr;
    check(rotcc_circuit_to_json(circuit, source.c_str(), info, &text));
    write_file(output.out, take_string(text));
  }
  if (!output.qasm.empty()) {
    char* text = nullptr;
    check(rotcc_circuit_to_qasm(circuit, &text));
    write_file(output.qasm, take_string(text));
  }
}

void add_output_options(CLI::App& app, OutputOptions& output) {
  app.add_option("--out", output.out, "Write the circuit as JSON");
  app.add_option("--qasm", output.qasm, "Write the circuit as OpenQASM 3");
}

Document load_document(const std::string& path) {
  const std::string text = read_file(path);
  rotcc_document* doc = nullptr;
  check(rotcc_circuit_from_json(text.c_str(), &doc));
  return Document(doc);
}

std::vector<double> register_weights(const rotcc_register* reg) {
  std::vector<double> w(rotcc_register_size(reg));
  check(rotcc_register_weights(reg, w.data(), w.size()));
  return w;
}

struct CompilePolyArgs {
  std::string coeffs;
  std::uint64_t max_tuples = 0;
};

void run_compile_poly(const CompilePolyArgs& args, const RegisterOptions& reg_opts,
                      const OutputOptions& output) {
  const auto coefficients = parse_numbers(args.coeffs, "coefficient");
  Register reg = reg_opts.build();
  rotcc_circuit* raw = nullptr;
  check(rotcc_compile_polynomial(coefficients.data(), coefficients.size(), reg.get(),
                                 args.max_tuples, &raw));
  Circuit circuit(raw);
  const std::string source = "poly:" + args.coeffs;
  emit_circuit(circuit.get(), source, nullptr, output);

  Json summary{{"command", "compile-poly"},
               {"function", source},
               {"n", rotcc_register_size(reg.get())},
               {"cost", cost_json(cost_of(circuit.get()))}};
  print_summary(summary, output.json);
}

struct CompileLutArgs {
  std::string fn;
  std::string policy = "zero";
  std::string raw_table;
  double zero_tol = -1.0;
};

void run_compile_lut(const CompileLutArgs& args, const RegisterOptions& reg_opts,
                     const OutputOptions& output) {
  Function fn = make_function(args.fn, args.policy);
  Register reg = reg_opts.build();
  rotcc_table* table_raw = nullptr;
  check(rotcc_compile_lut(fn.get(), reg.get(), &table_raw));
  Table table(table_raw);

  std::vector<rotcc_mask> excluded(rotcc_table_excluded_count(table.get()));
  check(rotcc_table_excluded(table.get(), excluded.data(), excluded.size()));
  for (rotcc_mask m : excluded) {
    double x = 0.0;
    check(rotcc_register_value(reg.get(), m, &x));
    std::cerr << "rotcc: excluded input mask " << m << " (x = " << number(x)
              << "): " << rotcc_function_name(fn.get()) << " is undefined there\n";
  }

  if (!args.raw_table.empty()) {
    char* text = nullptr;
    check(rotcc_table_to_json(table.get(), rotcc_function_name(fn.get()), &text));
    write_file(args.raw_table, take_string(text));
  }

  rotcc_circuit* raw = nullptr;
  check(rotcc_transform_lut(table.get(), &raw));
  Circuit circuit(raw);
  const std::size_t transformed = rotcc_circuit_gate_count(circuit.get());
  if (args.zero_tol >= 0.0) {
    rotcc_circuit* filtered = nullptr;
    check(rotcc_circuit_canonicalize(circuit.get(), args.zero_tol, &filtered));
    circuit.reset(filtered);
  }
  emit_circuit(circuit.get(), rotcc_function_name(fn.get()), nullptr, output);

  Json summary{{"command", "compile-lut"},
               {"function", rotcc_function_name(fn.get())},
               {"n", rotcc_register_size(reg.get())},
               {"transformed_gates", transformed},
               {"excluded", excluded},
               {"cost", cost_json(cost_of(circuit.get()))}};
  print_summary(summary, output.json);
}

struct ApproximateArgs {
  std::string in;
  std::optional<std::int64_t> toffoli_budget;
  std::optional<double> error_budget;
  std::string order = "ratio";
};

void run_approximate(const ApproximateArgs& args, const OutputOptions& output) {
  if (args.toffoli_budget.has_value() == args.error_budget.has_value()) {
    config_error("exactly one of --toffoli-budget and --error-budget is required");
  }
  Document doc = load_document(args.in);
  const rotcc_circuit* circuit = rotcc_document_circuit(doc.get());
  const rotcc_rank_order order = parse_order(args.order);

  rotcc_approximation* raw = nullptr;
  rotcc_approximation_info info{};
  if (args.toffoli_budget) {
    check(rotcc_truncate_to_toffoli_budget(circuit, *args.toffoli_budget, order, &raw));
    info.budget_kind = ROTCC_BUDGET_TOFFOLI;
    info.budget = static_cast<double>(*args.toffoli_budget);
  } else {
    check(rotcc_truncate_to_error_budget(circuit, *args.error_budget, order, &raw));
    info.budget_kind = ROTCC_BUDGET_ERROR;
    info.budget = *args.error_budget;
  }
  Approximation approx(raw);
  info.bound = rotcc_approximation_bound(approx.get());
  info.omitted = rotcc_approximation_omitted_count(approx.get());
  const rotcc_circuit* kept = rotcc_approximation_kept(approx.get());
  const std::string source = rotcc_document_source_function(doc.get());
  emit_circuit(kept, source, &info, output);

  Json summary{{"command", "approximate"},
               {"function", source},
               {"budget_kind", info.budget_kind == ROTCC_BUDGET_TOFFOLI ? "toffoli" : "error"},
               {"budget", info.budget},
               {"omitted", info.omitted},
               {"bound", info.bound},
               {"cost", cost_json(cost_of(kept))}};
  print_summary(summary, output.json);
}

struct SimulateArgs {
  std::string in;
  std::string fn;
  std::string policy = "zero";
  std::string mode = "fast";
  std::string baseline;
};

void run_simulate(const SimulateArgs& args, const RegisterOptions& reg_opts, bool as_json) {
  Document doc = load_document(args.in);
  const rotcc_circuit* circuit = rotcc_document_circuit(doc.get());
  const rotcc_register* circuit_reg = rotcc_circuit_register(circuit);

  if (reg_opts.given()) {
    Register expected = reg_opts.build();
    if (register_weights(expected.get()) != register_weights(circuit_reg)) {
      config_error("register mismatch: the circuit was compiled for a different argument "
                   "register than the one requested");
    }
  }

  std::string fn_text = args.fn;
  if (fn_text.empty()) fn_text = rotcc_document_source_function(doc.get());
  if (fn_text.empty()) config_error("--fn is required when the circuit records no function");
  Function fn = make_function(fn_text, args.policy);

  rotcc_error_report* raw = nullptr;
  check(rotcc_error_metrics(circuit, fn.get(), parse_mode(args.mode), &raw));
  Report report(raw);
  rotcc_error_summary s{};
  rotcc_error_report_summary(report.get(), &s);
  std::vector<rotcc_mask> excluded(s.excluded_count);
  check(rotcc_error_report_excluded(report.get(), excluded.data(), excluded.size()));

  Json summary{{"command", "simulate"},
               {"function", rotcc_function_name(fn.get())},
               {"n", rotcc_register_size(circuit_reg)},
               {"samples", s.samples},
               {"max_error", s.max_error},
               {"avg_error", s.avg_error},
               {"argmax_mask", s.argmax_mask},
               {"argmax_x", s.argmax_value},
               {"excluded", excluded}};
  if (!args.baseline.empty()) {
    if (args.baseline != "taylor") config_error("unknown baseline '" + args.baseline + "'");
    double taylor = 0.0;
    check(rotcc_taylor_baseline(circuit_reg, &taylor));
    summary["taylor_max_error"] = taylor;
  }
  print_summary(summary, as_json);
}

struct SweepArgs {
  std::string fn;
  std::string policy = "zero";
  std::string budgets = "full";
  std::string budget_kind = "toffoli";
  std::string source = "lut";
  std::string order = "ratio";
  std::string mode = "fast";
  std::string out;
};

void run_sweep(const SweepArgs& args, const RegisterOptions& reg_opts, bool as_json) {
  Function fn = make_function(args.fn, args.policy);

  std::vector<double> weights;
  if (!reg_opts.weights.empty()) weights = parse_numbers(reg_opts.weights, "weight");
  std::vector<std::size_t> sizes = reg_opts.sizes();
  if (!weights.empty()) {
    if (reg_opts.n_given && (sizes.size() != 1 || sizes.front() != weights.size())) {
      config_error("--n " + reg_opts.n_text + " disagrees with " +
                   std::to_string(weights.size()) + " weights");
    }
    sizes = {weights.size()};
  }
  const auto budget_texts = split(args.budgets, ',');
  std::vector<const char*> budgets;
  for (const auto& b : budget_texts) budgets.push_back(b.c_str());

  const std::string label = reg_opts.resolved_label();

  rotcc_sweep_config config{};
  config.function = fn.get();
  config.sizes = sizes.data();
  config.size_count = sizes.size();
  config.half_range = weights.empty() ? reg_opts.half_range() : 0.0;
  config.weights = weights.data();
  config.weight_count = weights.size();
  config.label = label.c_str();
  if (args.budget_kind == "toffoli") {
    config.budget_kind = ROTCC_BUDGET_TOFFOLI;
  } else if (args.budget_kind == "error") {
    config.budget_kind = ROTCC_BUDGET_ERROR;
  } else if (args.budget_kind == "none") {
    config.budget_kind = ROTCC_BUDGET_NONE;
  } else {
    config_error("unknown budget kind '" + args.budget_kind + "'");
  }
  config.budgets = budgets.data();
  config.budget_count = budgets.size();
  if (args.source == "lut") {
    config.source = ROTCC_SOURCE_LOOKUP_TABLE;
  } else if (args.source == "poly") {
    config.source = ROTCC_SOURCE_POLYNOMIAL;
  } else {
    config_error("unknown circuit source '" + args.source + "'");
  }
  config.order = parse_order(args.order);
  config.mode = parse_mode(args.mode);

  rotcc_sweep* raw = nullptr;
  check(rotcc_sweep_run(&config, &raw));
  Sweep sweep(raw);
  char* text = nullptr;
  check(rotcc_sweep_to_csv(sweep.get(), &text));
  const std::string csv = take_string(text);
  if (!args.out.empty()) write_file(args.out, csv);

  if (as_json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rotcc_sweep_row_count(sweep.get()); ++i) {
      rotcc_sweep_row row{};
      check(rotcc_sweep_row_at(sweep.get(), i, &row));
      rows.push_back(Json{{"function", row.function},
                          {"n", row.n},
                          {"budget", row.budget},
                          {"toffoli", row.cost.toffoli_count},
                          {"ancilla", row.cost.ancilla_count},
                          {"gate_count", row.cost.gate_count},
                          {"bound", row.bound},
                          {"max_error", row.max_error},
                          {"avg_error", row.avg_error}});
    }
    std::cout << rows.dump(2) << '\n';
  } else if (args.out.empty()) {
    std::cout << csv;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotcc: multi-controlled rotation circuit compiler"};
  app.set_version_flag("--version", std::string(rotcc_version()));
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print machine-readable JSON on stdout");

  RegisterOptions reg_opts;
  OutputOptions output;

  CompilePolyArgs poly_args;
  auto* poly = app.add_subcommand("compile-poly", "Compile a polynomial rotation");
  poly->add_option("--coeffs", poly_args.coeffs, "Coefficients a0,a1,...")->required();
  poly->add_option("--max-tuples", poly_args.max_tuples,
                   "Enumeration guard on n^degree (default 1e9)");
  reg_opts.add_to(*poly);
  add_output_options(*poly, output);

  CompileLutArgs lut_args;
  auto* lut = app.add_subcommand("compile-lut", "Compile a function through a lookup table");
  lut->add_option("--fn", lut_args.fn, "Target function")->required();
  lut->add_option("--policy", lut_args.policy, "Undefined values: zero | reject");
  lut->add_option("--raw-table", lut_args.raw_table, "Also write the dense table as JSON");
  lut->add_option("--zero-tol", lut_args.zero_tol, "Drop gates with |theta| <= tol");
  reg_opts.add_to(*lut);
  add_output_options(*lut, output);

  ApproximateArgs approx_args;
  auto* approx = app.add_subcommand("approximate", "Truncate a circuit to a budget");
  approx->add_option("--in", approx_args.in, "Input circuit JSON")->required();
  approx->add_option("--toffoli-budget", approx_args.toffoli_budget, "Toffoli budget");
  approx->add_option("--error-budget", approx_args.error_budget, "Worst-case error budget");
  approx->add_option("--order", approx_args.order, "Ranking: ratio | angle");
  add_output_options(*approx, output);

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Measure circuit error on every input");
  sim->add_option("--in", sim_args.in, "Input circuit JSON")->required();
  sim->add_option("--fn", sim_args.fn, "Target function (defaults to the recorded one)");
  sim->add_option("--policy", sim_args.policy, "Undefined values: zero | reject");
  sim->add_option("--mode", sim_args.mode, "Simulation: fast | accumulator");
  sim->add_option("--baseline", sim_args.baseline, "Also report a baseline: taylor");
  reg_opts.add_to(*sim);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Compile, approximate and simulate over a grid");
  sweep->add_option("--fn", sweep_args.fn, "Target function")->required();
  sweep->add_option("--policy", sweep_args.policy, "Undefined values: zero | reject");
  sweep->add_option("--budgets", sweep_args.budgets, "Budgets: numbers, full or full-K");
  sweep->add_option("--budget-kind", sweep_args.budget_kind, "toffoli | error | none");
  sweep->add_option("--source", sweep_args.source, "Exact circuit source: lut | poly");
  sweep->add_option("--order", sweep_args.order, "Ranking: ratio | angle");
  sweep->add_option("--mode", sweep_args.mode, "Simulation: fast | accumulator");
  sweep->add_option("--out", sweep_args.out, "Write the CSV here instead of stdout");
  reg_opts.add_to(*sweep);
  sweep->get_option("--n")->description("Register sizes, comma separated");

  for (auto* sub : {poly, lut, approx, sim, sweep}) {
    sub->add_flag("--json", as_json, "Print machine-readable JSON on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  output.json = as_json;

  try {
    if (*poly) run_compile_poly(poly_args, reg_opts, output);
    if (*lut) run_compile_lut(lut_args, reg_opts, output);
    if (*approx) run_approximate(approx_args, output);
    if (*sim) run_simulate(sim_args, reg_opts, as_json);
    if (*sweep) run_sweep(sweep_args, reg_opts, as_json);
  } catch (const Failure& e) {
    std::cerr << "rotcc: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "rotcc: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
