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
#include <span>
#include <vector>

#include "rotcc/circuit.hpp"
#include "rotcc/register.hpp"

namespace rotcc {

// p(x) = sum_k coefficients[k] * x^k. Trailing zero coefficients are dropped;
// the leading coefficient is nonzero unless p is constant.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coefficients);

  std::span<const double> coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.size() - 1; }
  double operator()(double x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coefficients_;
};

struct CompileLimits {
  // Upper bound on n^d, the number of control tuples enumerated for the
  // leading degree.
  std::uint64_t max_tuples = 1'000'000'000;
};

// Expands every monomial a_k x^k over all control tuples in {0..n-1}^k and
// accumulates a_k * w_i1 * ... * w_ik onto the gate keyed by the tuple's set
// of qubits. Tuples are visited in lexicographic order per degree.
RotationCircuit compile_polynomial(const Polynomial& p, const RegisterSpec& reg,
                                   const CompileLimits& limits = {});

struct PredictedCounts {
  std::uint64_t rotation_gates = 0;
  std::uint64_t ancilla = 0;
  std::uint64_t toffoli = 0;

  friend bool operator==(const PredictedCounts&, const PredictedCounts&) = default;
};

// Closed-form circuit dimensions of an exact degree-d rotation on n qubits.
PredictedCounts predict_counts(std::size_t n, std::size_t d);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace rotcc
