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

#include "rotcc/subset_transform.hpp"

#include <bit>

#include "rotcc/error.hpp"

namespace rotcc {

namespace {

template <typename Combine>
void butterfly(std::span<double> values, Combine combine) {
  const std::size_t size = values.size();
  if (!std::has_single_bit(size)) {
    fail(ErrorCode::kInvalidArgument, "subset transform needs 2^n entries");
  }
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * bit) {
      for (std::size_t m = block; m < block + bit; ++m) {
        combine(values[m | bit], values[m]);
      }
    }
  }
}

}  // namespace

void mobius_transform(std::span<double> values) {
  butterfly(values, [](double& hi, double lo) { hi -= lo; });
}

void zeta_transform(std::span<double> values) {
  butterfly(values, [](double& hi, double lo) { hi += lo; });
}

}  // namespace rotcc
