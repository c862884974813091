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

#include "rotcc/function.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "rotcc/error.hpp"
#include "rotcc/expression.hpp"

namespace rotcc {

namespace {

std::vector<double> parse_number_list(std::string_view text, std::string_view what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      fail(ErrorCode::kParse, "malformed " + std::string(what) + " '" + std::string(item) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

Evaluation finite_or_undefined(double v) {
  if (!std::isfinite(v)) return {Evaluation::Status::kUndefined, 0.0};
  return {Evaluation::Status::kOk, v};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

FunctionSpec FunctionSpec::arcsin() { return {FunctionKind::kArcsin, "arcsin"}; }

FunctionSpec FunctionSpec::scaled_arcsin_reciprocal() {
  return {FunctionKind::kScaledArcsinReciprocal, "asin-recip"};
}

FunctionSpec FunctionSpec::sin() { return {FunctionKind::kSin, "sin"}; }

FunctionSpec FunctionSpec::exp() { return {FunctionKind::kExp, "exp"}; }

FunctionSpec FunctionSpec::power(unsigned degree) {
  FunctionSpec f(FunctionKind::kPower, "pow:" + std::to_string(degree));
  f.degree_ = degree;
  std::vector<double> coeffs(degree + 1, 0.0);
  coeffs.back() = 1.0;
  f.polynomial_ = Polynomial(std::move(coeffs));
  return f;
}

FunctionSpec FunctionSpec::polynomial(Polynomial p) {
  std::string name = "poly:";
  const auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) name += ',';
    name += format_double(coeffs[i]);
  }
  FunctionSpec f(FunctionKind::kPolynomial, std::move(name));
  f.polynomial_ = std::move(p);
  return f;
}

FunctionSpec FunctionSpec::custom(std::string name, Callback fn) {
  if (!fn) fail(ErrorCode::kInvalidArgument, "custom function needs a callback");
  FunctionSpec f(FunctionKind::kCustom, std::move(name));
  f.custom_ = std::move(fn);
  return f;
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  if (text == "arcsin" || text == "asin") return arcsin();
  if (text == "asin-recip") return scaled_arcsin_reciprocal();
  if (text == "sin") return sin();
  if (text == "exp") return exp();
  if (text.starts_with("pow:")) {
    std::string_view digits = text.substr(4);
    unsigned degree = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), degree);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      fail(ErrorCode::kParse, "malformed power degree in '" + std::string(text) + "'");
    }
    return power(degree);
  }
  if (text.starts_with("poly:")) {
    return polynomial(Polynomial(parse_number_list(text.substr(5), "coefficient")));
  }
  if (text.starts_with("expr:")) {
    auto expr = Expression::parse(text.substr(5));
    return custom("expr:" + expr.text(), [expr](double x, std::size_t n) {
      return expr(x, static_cast<double>(n));
    });
  }
  fail(ErrorCode::kParse, "unknown function '" + std::string(text) + "'");
}

FunctionSpec FunctionSpec::with_policy(UndefinedPolicy policy) const {
  FunctionSpec copy = *this;
  copy.policy_ = policy;
  return copy;
}

Evaluation FunctionSpec::evaluate(double x, std::size_t n) const {
  using Status = Evaluation::Status;
  switch (kind_) {
    case FunctionKind::kArcsin:
      if (std::abs(x) > 1.0) return {Status::kOutOfDomain, 0.0};
      return {Status::kOk, std::asin(x)};
    case FunctionKind::kScaledArcsinReciprocal: {
      if (x == 0.0) return {Status::kUndefined, 0.0};
      const double arg = std::ldexp(1.0, -static_cast<int>(n)) / x;
      if (std::abs(arg) > 1.0) return {Status::kOutOfDomain, 0.0};
      return {Status::kOk, 2.0 * std::asin(arg)};
    }
    case FunctionKind::kSin:
      return {Status::kOk, std::sin(x)};
    case FunctionKind::kExp:
      return finite_or_undefined(std::exp(x));
    case FunctionKind::kPower:
      return finite_or_undefined(std::pow(x, static_cast<double>(degree_)));
    case FunctionKind::kPolynomial:
      return finite_or_undefined((*polynomial_)(x));
    case FunctionKind::kCustom:
      return finite_or_undefined(custom_(x, n));
  }
  return {Status::kUndefined, 0.0};
}

std::optional<Polynomial> FunctionSpec::as_polynomial() const { return polynomial_; }

}  // namespace rotcc
