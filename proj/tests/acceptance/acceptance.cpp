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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rotcc/approximator.hpp"
#include "rotcc/io.hpp"
#include "rotcc/lookup_table.hpp"
#include "rotcc/polynomial.hpp"
#include "rotcc/simulator.hpp"
#include "rotcc/subset_transform.hpp"
#include "rotcc/sweep.hpp"
#include "support/oracles.hpp"

namespace rotcc {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FAILED: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

bool within_factor_two(double value, double reference) {
  return value >= reference / 2 && value <= reference * 2;
}

const Polynomial kSeventhPower({0, 0, 0, 0, 0, 0, 0, 1});

void exact_seventh_power_cost(Outcome& out) {
  Stopwatch watch;
  const auto c = compile_polynomial(kSeventhPower, RegisterSpec::twos_complement(14, 0.5));
  const double elapsed = watch.seconds();
  const auto toffoli = cost_report(c).toffoli_count;
  out.detail << "toffoli=" << toffoli << " (want 94874), " << elapsed << " s (limit 60 s). ";
  out.require(toffoli == 94874, "toffoli count");
  out.require(elapsed < 60.0, "runtime");
}

void closed_form_counts(Outcome& out) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> coeff(0.5, 2.0);
  CompileLimits unlimited{std::numeric_limits<std::uint64_t>::max()};
  int checked = 0;
  int mismatches = 0;
  Stopwatch watch;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto reg = RegisterSpec::twos_complement(n, 0.5);
    for (std::size_t d = 0; d <= n; ++d) {
      std::vector<double> c(d + 1);
      for (auto& x : c) x = coeff(rng);
      const auto cost = cost_report(compile_polynomial(Polynomial(c), reg, unlimited));
      const auto predicted = predict_counts(n, d);
      ++checked;
      if (cost.gate_count != predicted.rotation_gates ||
          cost.toffoli_count != predicted.toffoli || cost.ancilla_count != predicted.ancilla) {
        ++mismatches;
        out.detail << "(n=" << n << ",d=" << d << ") ";
      }
    }
  }
  out.detail << checked << " (n,d) pairs, " << mismatches << " mismatches, " << watch.seconds()
             << " s. ";
  out.require(mismatches == 0, "closed-form counts disagree with compiled cost");
}

void seventh_power_approximation(Outcome& out) {
  const auto exact = compile_polynomial(kSeventhPower, RegisterSpec::twos_complement(14, 0.5));
  const auto f = FunctionSpec::power(7);
  struct Case {
    std::int64_t budget;
    std::uint64_t lo, hi;
    double error;
  };
  for (const Case& k : {Case{4350, 4340, 4356, 3.01e-5}, Case{1300, 1290, 1306, 2.93e-4}}) {
    const auto r = truncate_to_toffoli_budget(exact, k.budget);
    const double err = error_metrics(r.kept, f).max_error;
    out.detail << "budget " << k.budget << ": toffoli=" << r.cost.toffoli_count
               << " max_error=" << sci(err) << " (want " << sci(k.error) << "). ";
    out.require(r.cost.toffoli_count >= k.lo && r.cost.toffoli_count <= k.hi,
                "toffoli outside [" + std::to_string(k.lo) + ", " + std::to_string(k.hi) + "]");
    out.require(within_factor_two(err, k.error), "max error outside factor two");
  }
}

void arcsin_budget_grid(Outcome& out) {
  struct Cell {
    std::size_t n;
    std::int64_t budget;
    std::uint64_t toffoli, ancilla;
    double avg, max;
  };
  const Cell cells[] = {
      {8, 100, 100, 2, 4.54e-4, 3.33e-3},    {8, 500, 494, 4, 1.46e-5, 1.62e-4},
      {8, 900, 894, 5, 5.67e-7, 1.41e-5},    {8, 1300, 1292, 6, 3.61e-8, 1.19e-6},
      {10, 100, 98, 2, 4.58e-4, 3.44e-3},    {10, 500, 498, 4, 3.55e-5, 3.47e-4},
      {10, 900, 896, 4, 8.89e-6, 1.13e-4},   {10, 1300, 1298, 4, 2.84e-6, 4.21e-5},
      {12, 100, 98, 2, 4.66e-4, 3.56e-3},    {12, 500, 496, 4, 5.87e-5, 5.04e-4},
      {12, 900, 896, 4, 1.67e-5, 1.79e-4},   {12, 1300, 1294, 4, 6.83e-6, 8.67e-5},
  };
  Stopwatch watch;
  const auto f = FunctionSpec::arcsin();
  int bad = 0;
  std::size_t current_n = 0;
  RotationCircuit exact(RegisterSpec({1.0}));
  for (const auto& cell : cells) {
    if (cell.n != current_n) {
      exact = transform_lut(compile_lut(f, RegisterSpec::twos_complement(cell.n, 0.5)));
      current_n = cell.n;
    }
    const auto r = truncate_to_toffoli_budget(exact, cell.budget);
    const auto report = error_metrics(r.kept, f);
    const auto toffoli = static_cast<std::int64_t>(r.cost.toffoli_count);
    const bool ok = std::abs(toffoli - static_cast<std::int64_t>(cell.toffoli)) <= 8 &&
                    r.cost.ancilla_count == cell.ancilla &&
                    within_factor_two(report.max_error, cell.max) &&
                    within_factor_two(report.avg_error, cell.avg);
    if (!ok) {
      ++bad;
      out.detail << "[n=" << cell.n << " budget=" << cell.budget << ": toffoli " << toffoli
                 << " ancilla " << r.cost.ancilla_count << " max " << sci(report.max_error)
                 << " avg " << sci(report.avg_error) << "] ";
    }
  }
  const double elapsed = watch.seconds();
  out.detail << "12 cells, " << bad << " off, " << elapsed << " s (limit 300 s). ";
  out.require(bad == 0, "cells outside tolerance");
  out.require(elapsed < 300.0, "runtime");
}

void taylor(Outcome& out) {
  const double v = taylor_baseline(RegisterSpec::twos_complement(14, 0.5));
  out.detail << "baseline=" << sci(v) << " (want 2.36e-2 +- 1e-4). ";
  out.require(std::abs(v - 2.36e-2) <= 1e-4, "baseline");
}

void bound_soundness(Outcome& out) {
  std::mt19937_64 rng(6);
  int strict_violations = 0;
  int simulated_violations = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto reg = testing::random_register(n, rng);
    const auto exact = testing::random_circuit(reg, rng, 0.6);
    const auto full = cost_report(exact).toffoli_count;
    std::uniform_int_distribution<std::uint64_t> pick(0, full);
    const auto r = truncate_to_toffoli_budget(exact, static_cast<std::int64_t>(pick(rng)));
    const double bound = worst_case_bound(r.omitted);
    double magnitude = 0.0;
    for (const auto& g : exact.gates()) magnitude += std::abs(g.theta);
    const double roundoff = 64 * std::numeric_limits<double>::epsilon() * magnitude;
    const auto a = evaluate_all(exact);
    const auto b = evaluate_all(r.kept);
    for (Mask m = 0; m < reg.state_count(); ++m) {
      double fired = 0.0;
      for (const auto& g : r.omitted) {
        if (is_subset(g.controls, m)) fired += g.theta;
      }
      if (std::abs(fired) > bound) ++strict_violations;
      const double deviation = std::abs(a[m] - b[m]);
      if (deviation > bound + roundoff) ++simulated_violations;
      if (bound > 0) worst_ratio = std::max(worst_ratio, deviation / bound);
    }
  }
  out.detail << "200 circuits; omitted-sum violations " << strict_violations
             << ", simulated violations " << simulated_violations
             << ", largest deviation/bound " << worst_ratio << ". ";
  out.require(strict_violations == 0, "omitted contribution exceeds bound");
  out.require(simulated_violations == 0, "simulated deviation exceeds bound");
}

void mobius_zeta_roundtrip(Outcome& out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> real(-4.0, 4.0);
  std::uniform_int_distribution<int> integer(-100000, 100000);
  double worst_relative = 0.0;
  int integer_mismatches = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto reg = testing::random_register(n, rng);
      std::vector<double> angles(reg.state_count());
      for (auto& a : angles) a = real(rng);
      const double scale = *std::max_element(angles.begin(), angles.end(),
                                             [](double x, double y) {
                                               return std::abs(x) < std::abs(y);
                                             });
      const auto values = evaluate_all(transform_lut({reg, angles, {}}));
      for (std::size_t m = 0; m < angles.size(); ++m) {
        worst_relative =
            std::max(worst_relative, std::abs(values[m] - angles[m]) / std::abs(scale));
      }
      for (auto& a : angles) a = integer(rng);
      const auto exact = evaluate_all(transform_lut({reg, angles, {}}));
      if (exact != angles) ++integer_mismatches;
    }
  }
  out.detail << "worst relative error " << sci(worst_relative) << " (limit 1e-10), "
             << integer_mismatches << " inexact integer tables. ";
  out.require(worst_relative <= 1e-10, "real tables");
  out.require(integer_mismatches == 0, "integer tables");
}

void polynomial_equivalence(Outcome& out) {
  std::mt19937_64 rng(8);
  int checked = 0;
  int angle_mismatches = 0;
  int extra_support = 0;
  int missing_support = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t d = 0; d < n; ++d) {
      const auto reg = RegisterSpec::twos_complement(n, 0.5);
      const auto p = testing::random_polynomial(d, rng);
      const auto poly = compile_polynomial(p, reg);
      const auto lut = transform_lut(compile_lut(FunctionSpec::polynomial(p), reg));
      const auto filtered = canonicalize(lut, 1e-9);
      for (Mask m = 0; m < reg.state_count(); ++m) {
        if (std::abs(poly.angle(m) - lut.angle(m)) > 1e-9) ++angle_mismatches;
      }
      for (const auto& g : filtered.gates()) {
        if (poly.angle(g.controls) == 0.0) ++extra_support;
      }
      for (const auto& g : poly.gates()) {
        if (std::abs(g.theta) > 2e-9 && filtered.angle(g.controls) == 0.0) ++missing_support;
      }
      ++checked;
    }
  }
  out.detail << checked << " polynomials; angle mismatches " << angle_mismatches
             << ", gates only in table circuit " << extra_support
             << ", significant gates missing from table circuit " << missing_support << ". ";
  out.require(angle_mismatches == 0, "angles differ by more than 1e-9");
  out.require(extra_support == 0 && missing_support == 0, "support differs");
}

void fast_path_oracle(Outcome& out) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> integer(-1000, 1000);
  double worst = 0.0;
  int integer_mismatches = 0;
  int accumulator_mismatches = 0;
  std::size_t inputs = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto reg = testing::random_register(n, rng);
    const auto c = testing::random_circuit(reg, rng, 0.5);
    double magnitude = 0.0;
    for (const auto& g : c.gates()) magnitude += std::abs(g.theta);
    const auto fast = evaluate_all(c);
    const auto accumulator = evaluate_all(c, SimulationMode::kAccumulator);

    std::vector<RotationGate> whole;
    for (const auto& g : c.gates()) whole.push_back({g.controls, std::round(g.theta * 1000)});
    const RotationCircuit ic(reg, whole);
    const auto ifast = evaluate_all(ic);
    for (Mask m = 0; m < reg.state_count(); ++m) {
      const double reference = testing::brute_force_evaluate(c, m);
      worst = std::max(worst, std::abs(fast[m] - reference) / std::max(magnitude, 1.0));
      if (accumulator[m] != reference) ++accumulator_mismatches;
      if (ifast[m] != testing::brute_force_evaluate(ic, m)) ++integer_mismatches;
      ++inputs;
    }
  }
  out.detail << inputs << " inputs; fast vs brute force worst " << sci(worst)
             << " of total |theta| (limit 1e-12), integer mismatches " << integer_mismatches
             << ", accumulator mismatches " << accumulator_mismatches << ". ";
  out.require(worst <= 1e-12, "fast path deviates");
  out.require(integer_mismatches == 0, "integer circuits not exact");
  out.require(accumulator_mismatches == 0, "accumulator path deviates");
}

void reciprocal_limit(Outcome& out) {
  const auto reg = RegisterSpec::twos_complement(10, 1.0);
  const auto f = FunctionSpec::scaled_arcsin_reciprocal();
  const auto target = compile_lut(f, reg);
  const auto exact = transform_lut(target);
  const auto full = static_cast<std::int64_t>(cost_report(exact).toffoli_count);
  double smallest = INFINITY;
  std::int64_t smallest_budget = 0;
  for (std::int64_t budget : {std::int64_t{0}, std::int64_t{100}, std::int64_t{1000},
                              full / 4, full / 2, full - 100, full - 1}) {
    const auto r = truncate_to_toffoli_budget(exact, budget);
    const double err = error_metrics(r.kept, target).max_error;
    if (err < smallest) {
      smallest = err;
      smallest_budget = budget;
    }
  }
  out.detail << "n=10 full toffoli " << full << "; smallest max error over budgets < full is "
             << sci(smallest) << " at budget " << smallest_budget << " (want >= 1e2). ";
  out.require(smallest >= 1e2, "max error below 1e2 for a budget under full");
}

void exponential_floor(Outcome& out) {
  const auto f = FunctionSpec::exp();
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t n : {8, 10, 12}) {
    const auto reg = RegisterSpec::twos_complement(n, 1.0);
    const auto exact = transform_lut(compile_lut(f, reg));
    const double err = error_metrics(exact, f, SimulationMode::kAccumulator).max_error;
    out.detail << "n=" << n << " max_error=" << sci(err) << ". ";
    out.require(err > eps, "error at or below machine epsilon for n=" + std::to_string(n));
    out.require(err <= 1e-9, "error above 1e-9 for n=" + std::to_string(n));
  }
}

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) ++count;
  }
  return count;
}

void qasm_export(Outcome& out) {
  std::mt19937_64 rng(11);
  int count_mismatches = 0;
  double worst = 0.0;
  std::size_t programs = 0;
  std::vector<RotationCircuit> circuits;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      circuits.push_back(testing::random_circuit(testing::random_register(n, rng), rng, 0.8));
    }
    circuits.push_back(transform_lut(
        compile_lut(FunctionSpec::arcsin(), RegisterSpec::twos_complement(n, 0.5))));
  }
  for (const auto& c : circuits) {
    const auto qasm = export_qasm(c);
    if (count_prefix(qasm, "ccx ") != cost_report(c).toffoli_count) ++count_mismatches;
    testing::QasmMachine machine(qasm);
    const std::size_t t = std::size_t{1} << machine.target_bit();
    for (Mask m = 0; m < c.reg().state_count(); ++m) {
      const auto state = machine.run(m);
      const auto want = rotation_amplitudes(evaluate(c, m));
      worst = std::max({worst, std::abs(state[m] - want.zero), std::abs(state[m | t] - want.one)});
      double leaked = 0.0;
      for (std::size_t i = 0; i < state.size(); ++i) {
        if (i != m && i != (m | t)) leaked += state[i] * state[i];
      }
      worst = std::max(worst, std::sqrt(leaked));
    }
    ++programs;
  }
  for (std::size_t n : {8, 10}) {
    const auto c = transform_lut(
        compile_lut(FunctionSpec::arcsin(), RegisterSpec::twos_complement(n, 0.5)));
    if (count_prefix(export_qasm(c), "ccx ") != cost_report(c).toffoli_count) ++count_mismatches;
    ++programs;
  }
  out.detail << programs << " programs; ccx count mismatches " << count_mismatches
             << ", worst amplitude deviation " << sci(worst) << " (limit 1e-9). ";
  out.require(count_mismatches == 0, "Toffoli statement count");
  out.require(worst <= 1e-9, "statevector amplitudes");
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"1", "exact x^7 cost on 14 qubits", exact_seventh_power_cost},
      {"2", "closed-form counts for n <= 10, d <= n", closed_form_counts},
      {"3", "x^7 approximation at budgets 4350 and 1300", seventh_power_approximation},
      {"4", "arcsin Toffoli-budget table", arcsin_budget_grid},
      {"5", "first-order Taylor baseline", taylor},
      {"6", "worst-case bound soundness", bound_soundness},
      {"7", "lookup-table transform round trip", mobius_zeta_roundtrip},
      {"8", "polynomial and lookup-table equivalence", polynomial_equivalence},
      {"9", "fast simulation against brute force", fast_path_oracle},
      {"10a", "asin-recip errors below the full budget", reciprocal_limit},
      {"10b", "exp rounding floor with all gates", exponential_floor},
      {"11", "OpenQASM export", qasm_export},
  };
  return all;
}

}  // namespace
}  // namespace rotcc

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  int ran = 0;
  for (const auto& c : rotcc::criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) {
      continue;
    }
    rotcc::Outcome out;
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    ++ran;
    if (!out.pass) ++failures;
    std::printf("[%s] %s %s: %s\n", out.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matched\n");
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
