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

#include "rotcc/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "rotcc/error.hpp"

namespace rotcc {

struct Expression::Node {
  enum class Op { kConst, kX, kN, kAdd, kSub, kMul, kDiv, kPow, kNeg, kCall1, kCall2 };
  Op op = Op::kConst;
  double value = 0.0;
  double (*fn1)(double) = nullptr;
  double (*fn2)(double, double) = nullptr;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x, double n) const {
    switch (op) {
      case Op::kConst: return value;
      case Op::kX: return x;
      case Op::kN: return n;
      case Op::kAdd: return lhs->eval(x, n) + rhs->eval(x, n);
      case Op::kSub: return lhs->eval(x, n) - rhs->eval(x, n);
      case Op::kMul: return lhs->eval(x, n) * rhs->eval(x, n);
      case Op::kDiv: return lhs->eval(x, n) / rhs->eval(x, n);
      case Op::kPow: return std::pow(lhs->eval(x, n), rhs->eval(x, n));
      case Op::kNeg: return -lhs->eval(x, n);
      case Op::kCall1: return fn1(lhs->eval(x, n));
      case Op::kCall2: return fn2(lhs->eval(x, n), rhs->eval(x, n));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

struct Unary {
  const char* name;
  double (*fn)(double);
};

const Unary kUnary[] = {
    {"sin", [](double v) { return std::sin(v); }},
    {"cos", [](double v) { return std::cos(v); }},
    {"tan", [](double v) { return std::tan(v); }},
    {"asin", [](double v) { return std::asin(v); }},
    {"arcsin", [](double v) { return std::asin(v); }},
    {"acos", [](double v) { return std::acos(v); }},
    {"atan", [](double v) { return std::atan(v); }},
    {"sinh", [](double v) { return std::sinh(v); }},
    {"cosh", [](double v) { return std::cosh(v); }},
    {"tanh", [](double v) { return std::tanh(v); }},
    {"exp", [](double v) { return std::exp(v); }},
    {"log", [](double v) { return std::log(v); }},
    {"ln", [](double v) { return std::log(v); }},
    {"sqrt", [](double v) { return std::sqrt(v); }},
    {"abs", [](double v) { return std::abs(v); }},
};

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto node = std::make_shared<Expression::Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

NodePtr constant(double v) {
  auto node = std::make_shared<Expression::Node>();
  node->value = v;
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = sum();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParse, "expression '" + std::string(text_) + "' at column " +
                                std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::kAdd, lhs, product());
      } else if (accept('-')) {
        lhs = make(Op::kSub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::kMul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Op::kDiv, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::kNeg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::kPow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    if (accept('(')) {
      NodePtr inner = sum();
      expect(')');
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    error("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc{}) error("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return constant(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return make(Op::kX);
    if (name == "n") return make(Op::kN);
    if (name == "pi") return constant(std::numbers::pi);
    if (name == "e") return constant(std::numbers::e);

    if (name == "pow" || name == "atan2") {
      expect('(');
      NodePtr a = sum();
      expect(',');
      NodePtr b = sum();
      expect(')');
      auto node = std::make_shared<Expression::Node>();
      node->op = Op::kCall2;
      node->fn2 = name == "pow" ? +[](double u, double v) { return std::pow(u, v); }
                                : +[](double u, double v) { return std::atan2(u, v); };
      node->lhs = std::move(a);
      node->rhs = std::move(b);
      return node;
    }
    for (const auto& u : kUnary) {
      if (name == u.name) {
        expect('(');
        NodePtr arg = sum();
        expect(')');
        auto node = std::make_shared<Expression::Node>();
        node->op = Op::kCall1;
        node->fn1 = u.fn;
        node->lhs = std::move(arg);
        return node;
      }
    }
    pos_ = start;
    error("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  return Expression(std::string(text), Parser(text).parse());
}

double Expression::operator()(double x, double n) const { return root_->eval(x, n); }

}  // namespace rotcc
