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
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "rotcc/polynomial.hpp"

namespace rotcc {

enum class FunctionKind {
  kArcsin,
  kScaledArcsinReciprocal,  // 2 * arcsin(2^-n / x)
  kSin,
  kExp,
  kPower,
  kPolynomial,
  kCustom,
};

// What to do at register values where the target function has a pole.
enum class UndefinedPolicy {
  kReject,
  // Angle 0 in the table; the input is excluded from error metrics.
  kZeroAndExclude,
};

struct Evaluation {
  enum class Status { kOk, kUndefined, kOutOfDomain };
  Status status = Status::kOk;
  double value = 0.0;
};

// Target function of a rotation. Evaluation receives the register size so
// that register-dependent families can be expressed.
class FunctionSpec {
 public:
  using Callback = std::function<double(double x, std::size_t n)>;

  static FunctionSpec arcsin();
  static FunctionSpec scaled_arcsin_reciprocal();
  static FunctionSpec sin();
  static FunctionSpec exp();
  static FunctionSpec power(unsigned degree);
  static FunctionSpec polynomial(Polynomial p);
  // Non-finite callback results count as undefined.
  static FunctionSpec custom(std::string name, Callback fn);

  // arcsin | asin | asin-recip | sin | exp | pow:D | poly:a0,a1,... | expr:<expression>
  static FunctionSpec parse(std::string_view text);

  FunctionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  UndefinedPolicy policy() const { return policy_; }
  FunctionSpec with_policy(UndefinedPolicy policy) const;

  Evaluation evaluate(double x, std::size_t n) const;

  // Exact polynomial form for kPower and kPolynomial.
  std::optional<Polynomial> as_polynomial() const;

 private:
  FunctionSpec(FunctionKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  FunctionKind kind_;
  std::string name_;
  UndefinedPolicy policy_ = UndefinedPolicy::kZeroAndExclude;
  unsigned degree_ = 0;
  std::optional<Polynomial> polynomial_;
  Callback custom_;
};

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace rotcc
