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

#include "rotcc/register.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "rotcc/error.hpp"

namespace rotcc {

std::size_t max_register_size() {
  const char* env = std::getenv("ROTCC_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxQubits;
  std::string_view text(env);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
    fail(ErrorCode::kInvalidArgument,
         "ROTCC_MAX_N must be a positive integer, got '" + std::string(text) + "'");
  }
  return value < kHardMaxQubits ? value : kHardMaxQubits;
}

RegisterSpec::RegisterSpec(std::vector<double> weights, std::string label)
    : weights_(std::move(weights)), label_(std::move(label)) {
  const std::size_t limit = max_register_size();
  if (weights_.empty() || weights_.size() > limit) {
    fail(ErrorCode::kInvalidArgument,
         "register size must be in [1, " + std::to_string(limit) + "], got " +
             std::to_string(weights_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] == 0.0) {
      fail(ErrorCode::kInvalidArgument,
           "weight " + std::to_string(i) + " must be finite and nonzero");
    }
  }
}

RegisterSpec RegisterSpec::twos_complement(std::size_t n, double half_range,
                                           std::string label) {
  if (!(half_range > 0.0) || !std::isfinite(half_range)) {
    fail(ErrorCode::kInvalidArgument, "two's complement range must be positive");
  }
  std::vector<double> weights;
  weights.reserve(n);
  if (n > 0) weights.push_back(-half_range);
  for (std::size_t i = 1; i < n; ++i) {
    weights.push_back(std::ldexp(half_range, -static_cast<int>(i)));
  }
  return RegisterSpec(std::move(weights), std::move(label));
}

double RegisterSpec::value_of(Mask mask) const {
  double x = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (mask >> i & 1U) x += weights_[i];
  }
  return x;
}

std::vector<double> RegisterSpec::all_values() const {
  std::vector<double> values(state_count());
  for (std::size_t m = 0; m < values.size(); ++m) {
    values[m] = value_of(static_cast<Mask>(m));
  }
  return values;
}

}  // namespace rotcc
