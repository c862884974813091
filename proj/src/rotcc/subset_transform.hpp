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

#include <cstddef>
#include <span>

namespace rotcc {

// In-place transforms over the subset lattice of n bits; values.size() must
// be 2^n. Bit levels are processed in ascending order, masks ascending within
// a level.

// values[s] <- sum over t subset of s of (-1)^(|s|-|t|) values[t]
void mobius_transform(std::span<double> values);

// values[s] <- sum over t subset of s of values[t]
void zeta_transform(std::span<double> values);

}  // namespace rotcc
