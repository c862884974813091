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

#include "rotcc/polynomial.hpp"

#include <cmath>
#include <string>

#include "rotcc/error.hpp"

namespace rotcc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorCode::kInvalidArgument, "count overflows 64 bits");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorCode::kInvalidArgument, "count overflows 64 bits");
  }
  return r;
}

class TupleExpander {
 public:
  TupleExpander(std::span<const double> weights, std::vector<double>& acc)
      : weights_(weights), acc_(acc) {}

  void expand(int remaining, double prefix, Mask mask) {
    const std::size_t n = weights_.size();
    if (remaining == 1) {
      for (std::size_t i = 0; i < n; ++i) acc_[mask | (Mask{1} << i)] += prefix * weights_[i];
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      expand(remaining - 1, prefix * weights_[i], mask | (Mask{1} << i));
    }
  }

 private:
  std::span<const double> weights_;
  std::vector<double>& acc_;
};

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    fail(ErrorCode::kInvalidArgument, "polynomial needs at least one coefficient");
  }
  for (double a : coefficients_) {
    if (!std::isfinite(a)) fail(ErrorCode::kInvalidArgument, "coefficients must be finite");
  }
  while (coefficients_.size() > 1 && coefficients_.back() == 0.0) coefficients_.pop_back();
}

double Polynomial::operator()(double x) const {
  double y = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) y = y * x + *it;
  return y;
}

RotationCircuit compile_polynomial(const Polynomial& p, const RegisterSpec& reg,
                                   const CompileLimits& limits) {
  const std::size_t n = reg.size();
  const std::size_t d = p.degree();
  std::uint64_t tuples = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (__builtin_mul_overflow(tuples, n, &tuples) || tuples > limits.max_tuples) {
      fail(ErrorCode::kCompileGuard,
           "enumerating " + std::to_string(n) + "^" + std::to_string(d) +
               " control tuples exceeds the limit of " + std::to_string(limits.max_tuples));
    }
  }

  std::vector<double> acc(reg.state_count(), 0.0);
  TupleExpander expander(reg.weights(), acc);
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    if (k == 0) {
      acc[0] += coeffs[0];
    } else {
      expander.expand(static_cast<int>(k), coeffs[k], 0);
    }
  }

  std::vector<RotationGate> gates;
  for (std::size_t m = 0; m < acc.size(); ++m) {
    if (acc[m] != 0.0) gates.push_back({static_cast<Mask>(m), acc[m]});
  }
  return RotationCircuit(reg, std::move(gates));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

PredictedCounts predict_counts(std::size_t n, std::size_t d) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "register size must be at least 1");
  PredictedCounts counts;
  const std::size_t top = n <= d ? n : d;
  for (std::size_t k = 0; k <= top; ++k) {
    counts.rotation_gates = checked_add(counts.rotation_gates, binomial(n, k));
    counts.toffoli =
        checked_add(counts.toffoli, checked_mul(binomial(n, k), toffoli_cost(static_cast<int>(k))));
  }
  counts.ancilla = top >= 1 ? top - 1 : 0;
  return counts;
}

}  // namespace rotcc
