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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rotcc {

// Bit i set <=> argument qubit i is in |1>.
using Mask = std::uint32_t;

inline int control_count(Mask mask) { return std::popcount(mask); }

inline bool is_subset(Mask inner, Mask outer) { return (inner & ~outer) == 0; }

inline constexpr std::size_t kDefaultMaxQubits = 24;
inline constexpr std::size_t kHardMaxQubits = 30;

// Register size limit, overridable through ROTCC_MAX_N up to kHardMaxQubits.
std::size_t max_register_size();

// Fixed-point basis encoding of the rotation argument: qubit i contributes
// weights[i] when set. Weights need not be equidistant.
class RegisterSpec {
 public:
  explicit RegisterSpec(std::vector<double> weights, std::string label = {});

  // Weights [-a, a/2, ..., a/2^(n-1)], i.e. 2^n equidistant values in [-a, a).
  static RegisterSpec twos_complement(std::size_t n, double half_range,
                                      std::string label = {});

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  const std::string& label() const { return label_; }

  std::size_t state_count() const { return std::size_t{1} << size(); }
  Mask full_mask() const { return static_cast<Mask>(state_count() - 1); }
  bool contains(Mask mask) const { return (mask & ~full_mask()) == 0; }

  // Sum of the weights of the set bits, accumulated in ascending bit order.
  double value_of(Mask mask) const;

  // Values of every basis state, indexed by mask.
  std::vector<double> all_values() const;

  friend bool operator==(const RegisterSpec&, const RegisterSpec&) = default;

 private:
  std::vector<double> weights_;
  std::string label_;
};

}  // namespace rotcc
