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

#include <memory>
#include <string>
#include <string_view>

namespace rotcc {

// Arithmetic expression over the argument `x` and the register size `n`.
//
// Supports + - * / ^ (right associative), unary minus, parentheses, the
// constants pi and e, and the functions sin cos tan asin/arcsin acos atan
// sinh cosh tanh exp log/ln sqrt abs, plus pow(a, b) and atan2(y, x).
class Expression {
 public:
  static Expression parse(std::string_view text);

  double operator()(double x, double n) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  Expression(std::string text, std::shared_ptr<const Node> root)
      : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace rotcc
