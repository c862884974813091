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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rotcc/approximator.hpp"
#include "rotcc/error.hpp"
#include "rotcc/lookup_table.hpp"
#include "rotcc/polynomial.hpp"
#include "rotcc/simulator.hpp"
#include "support/oracles.hpp"

namespace rotcc {
namespace {

RegisterSpec three_qubits() { return RegisterSpec::twos_complement(3, 0.5); }

RotationCircuit arcsin_circuit(std::size_t n) {
  return transform_lut(compile_lut(FunctionSpec::arcsin(), RegisterSpec::twos_complement(n, 0.5)));
}

TEST(RankGates, RatioOrder) {
  RotationCircuit c(three_qubits(), {{0b011, 0.2}, {0b111, 0.2}});
  const auto ranked = rank_gates(c);
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].gate.controls, 0b111u);
  EXPECT_DOUBLE_EQ(ranked[0].ratio, 0.05);
  EXPECT_EQ(ranked[1].gate.controls, 0b011u);
  EXPECT_DOUBLE_EQ(ranked[1].ratio, 0.1);
}

TEST(RankGates, CheapGatesAreNotCandidates) {
  RotationCircuit c(three_qubits(), {{0, 1.0}, {0b001, 0.1}, {0b100, 0.2}});
  EXPECT_TRUE(rank_gates(c).empty());
}

TEST(RankGates, TiesPreferMoreControls) {
  RotationCircuit c(three_qubits(), {{0b011, 0.1}, {0b111, 0.2}});
  const auto ranked = rank_gates(c);
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].gate.controls, 0b111u);
  EXPECT_EQ(ranked[1].gate.controls, 0b011u);
}

TEST(RankGates, TiesThenPreferLowerMask) {
  RotationCircuit c(three_qubits(), {{0b011, -0.1}, {0b101, 0.1}, {0b110, 0.1}});
  const auto ranked = rank_gates(c);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].gate.controls, 0b011u);
  EXPECT_EQ(ranked[1].gate.controls, 0b101u);
  EXPECT_EQ(ranked[2].gate.controls, 0b110u);
}

TEST(RankGates, SkipsZeroAngles) {
  RotationCircuit c(three_qubits(), {{0b011, 0.0}, {0b111, 0.3}});
  EXPECT_EQ(rank_gates(c).size(), 1u);
}

TEST(RankGates, AbsoluteAngleOrder) {
  RotationCircuit c(three_qubits(), {{0b011, 0.1}, {0b111, 0.15}});
  const auto ranked = rank_gates(c, RankOrder::kAbsoluteAngle);
  EXPECT_EQ(ranked[0].gate.controls, 0b011u);
  const auto by_ratio = rank_gates(c);
  EXPECT_EQ(by_ratio[0].gate.controls, 0b111u);
}

TEST(ToffoliBudget, GenerousBudgetKeepsEverything) {
  const auto c = arcsin_circuit(6);
  const auto full = cost_report(c).toffoli_count;
  const auto r = truncate_to_toffoli_budget(c, static_cast<std::int64_t>(full));
  EXPECT_TRUE(r.omitted.empty());
  EXPECT_EQ(r.bound, 0.0);
  EXPECT_EQ(r.kept, c);
}

TEST(ToffoliBudget, ZeroBudgetKeepsCostFreeGates) {
  const auto c = arcsin_circuit(6);
  const auto r = truncate_to_toffoli_budget(c, 0);
  EXPECT_EQ(r.cost.toffoli_count, 0u);
  for (const auto& g : r.kept.gates()) EXPECT_LE(control_count(g.controls), 1);
  for (const auto& g : c.gates()) {
    if (control_count(g.controls) <= 1) {
      EXPECT_EQ(r.kept.angle(g.controls), g.theta);
    }
  }
}

TEST(ToffoliBudget, NegativeBudgetRejected) {
  EXPECT_THROW(truncate_to_toffoli_budget(arcsin_circuit(3), -1), Error);
}

TEST(ToffoliBudget, OmitsShortestPrefix) {
  const auto c = arcsin_circuit(8);
  const auto ranked = rank_gates(c);
  for (std::int64_t budget : {0, 100, 500, 900, 1300}) {
    const auto r = truncate_to_toffoli_budget(c, budget);
    EXPECT_LE(r.cost.toffoli_count, static_cast<std::uint64_t>(budget));
    ASSERT_LE(r.omitted.size(), ranked.size());
    for (std::size_t i = 0; i < r.omitted.size(); ++i) EXPECT_EQ(r.omitted[i], ranked[i].gate);
    if (!r.omitted.empty()) {
      const auto& last = r.omitted.back();
      const auto without_last = r.cost.toffoli_count + toffoli_cost(control_count(last.controls));
      EXPECT_GT(without_last, static_cast<std::uint64_t>(budget));
    }
  }
}

TEST(ToffoliBudget, ArcsinEightQubitBudgets) {
  const auto c = arcsin_circuit(8);
  const std::uint64_t toffoli[] = {100, 494, 894, 1292};
  const std::uint64_t ancilla[] = {2, 4, 5, 6};
  const std::int64_t budgets[] = {100, 500, 900, 1300};
  for (int i = 0; i < 4; ++i) {
    const auto r = truncate_to_toffoli_budget(c, budgets[i]);
    EXPECT_EQ(r.cost.toffoli_count, toffoli[i]);
    EXPECT_EQ(r.cost.ancilla_count, ancilla[i]);
  }
}

TEST(ToffoliBudget, SeventhPowerBudgets) {
  const auto c = compile_polynomial(Polynomial({0, 0, 0, 0, 0, 0, 0, 1}),
                                    RegisterSpec::twos_complement(14, 0.5));
  const auto f = FunctionSpec::power(7);
  const auto small = truncate_to_toffoli_budget(c, 1300);
  EXPECT_EQ(small.cost.toffoli_count, 1298u);
  EXPECT_NEAR(error_metrics(small.kept, f).max_error, 2.93e-4, 0.01e-4);
  const auto large = truncate_to_toffoli_budget(c, 4350);
  EXPECT_EQ(large.cost.toffoli_count, 4348u);
  EXPECT_NEAR(error_metrics(large.kept, f).max_error, 3.01e-5, 0.01e-5);
}

TEST(ErrorBudget, ZeroEpsilonIsIdentity) {
  const auto c = arcsin_circuit(6);
  const auto r = truncate_to_error_budget(c, 0.0);
  EXPECT_TRUE(r.omitted.empty());
  EXPECT_EQ(r.kept, c);
}

TEST(ErrorBudget, TotalEpsilonOmitsAllCandidates) {
  const auto c = arcsin_circuit(6);
  double total = 0.0;
  for (const auto& g : rank_gates(c)) total += std::abs(g.gate.theta);
  const auto r = truncate_to_error_budget(c, total);
  EXPECT_EQ(r.omitted.size(), rank_gates(c).size());
  EXPECT_EQ(r.cost.toffoli_count, 0u);
}

TEST(ErrorBudget, ArcsinTenQubitsWithinEpsilon) {
  const auto c = arcsin_circuit(10);
  const auto r = truncate_to_error_budget(c, 1e-3);
  EXPECT_LE(r.bound, 1e-3);
  EXPECT_LE(error_metrics(r.kept, FunctionSpec::arcsin()).max_error, 1e-3);
  EXPECT_LT(r.cost.toffoli_count, cost_report(c).toffoli_count);
}

TEST(ErrorBudget, NegativeEpsilonRejected) {
  EXPECT_THROW(truncate_to_error_budget(arcsin_circuit(3), -1e-3), Error);
}

TEST(WorstCaseBound, Values) {
  EXPECT_EQ(worst_case_bound({}), 0.0);
  const std::vector<RotationGate> gates{{0b11, 0.1}, {0b111, -0.2}};
  EXPECT_DOUBLE_EQ(worst_case_bound(gates), 0.3);
}

TEST(ApproximatorProperties, BoundDominatesOmittedContribution) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const auto reg = testing::random_register(n, rng);
    const auto c = testing::random_circuit(reg, rng, 0.6);
    const auto full = cost_report(c).toffoli_count;
    std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(full));
    const auto r = truncate_to_toffoli_budget(c, pick(rng));
    EXPECT_DOUBLE_EQ(r.bound, worst_case_bound(r.omitted));
    for (Mask m = 0; m < reg.state_count(); ++m) {
      double omitted = 0.0;
      for (const auto& g : r.omitted) {
        if (is_subset(g.controls, m)) omitted += g.theta;
      }
      EXPECT_LE(std::abs(omitted), r.bound);
    }
  }
}

TEST(ApproximatorProperties, KeptPlusOmittedIsOriginal) {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    const auto reg = testing::random_register(2 + trial % 7, rng);
    const auto c = testing::random_circuit(reg, rng, 0.7);
    const auto r = truncate_to_error_budget(c, 0.5 * trial / 30.0);
    std::vector<RotationGate> all(r.kept.gates().begin(), r.kept.gates().end());
    all.insert(all.end(), r.omitted.begin(), r.omitted.end());
    EXPECT_EQ(canonicalize(reg, all), canonicalize(c));
    EXPECT_EQ(r.kept.size() + r.omitted.size(), c.size());
  }
}

TEST(ApproximatorProperties, MonotoneInBudget) {
  const auto c = arcsin_circuit(9);
  double previous_bound = INFINITY;
  std::uint64_t previous_toffoli = 0;
  for (std::int64_t budget = 0; budget <= 3000; budget += 97) {
    const auto r = truncate_to_toffoli_budget(c, budget);
    EXPECT_LE(r.bound, previous_bound);
    EXPECT_GE(r.cost.toffoli_count, previous_toffoli);
    previous_bound = r.bound;
    previous_toffoli = r.cost.toffoli_count;
  }
}

}  // namespace
}  // namespace rotcc
