#include "quintell/radical.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <type_traits>

#include "quintell/errors.hpp"

namespace quintell {

struct RadicalExpression::Node {
  enum class Kind { kInteger, kAdd, kSub, kMul, kDiv, kNeg, kPow, kRoot };

  Kind kind;
  std::int64_t integer = 0;  // kInteger
  // kPow: base^(p/q).  kRoot: q-th root with p = 1.
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = RadicalExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("radical expression: " + what + " at offset " + std::to_string(pos_) + " in '" +
                      std::string(text_) + "'");
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
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t integer() {
    if (!at_digit()) fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer literal too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return v;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (true) {
      if (accept('+')) {
        left = make_node(Node::Kind::kAdd, left, term());
      } else if (accept('-')) {
        left = make_node(Node::Kind::kSub, left, term());
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    while (true) {
      if (accept('*')) {
        left = make_node(Node::Kind::kMul, left, unary());
      } else if (accept('/')) {
        left = make_node(Node::Kind::kDiv, left, unary());
      } else {
        return left;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_node(Node::Kind::kNeg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    std::int64_t p = 1;
    std::int64_t q = 1;
    if (accept('(')) {
      const bool negative = accept('-');
      p = integer();
      if (negative) p = -p;
      if (accept('/')) q = integer();
      expect(')');
    } else {
      p = integer();
    }
    if (q == 0) fail("zero exponent denominator");
    const std::int64_t g = std::gcd(p, q);
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::kPow;
    n->p = g == 0 ? p : p / g;
    n->q = g == 0 ? q : q / g;
    n->lhs = std::move(base);
    return n;
  }

  NodePtr primary() {
    if (at_digit()) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::kInteger;
      n->integer = integer();
      return n;
    }
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    skip_space();
    for (const auto& [name, order] : {std::pair<std::string_view, int>{"sqrt", 2}, {"cbrt", 3}}) {
      if (text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        expect('(');
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::kRoot;
        n->q = order;
        n->lhs = expr();
        expect(')');
        return n;
      }
    }
    fail("expected a number, '(' or sqrt/cbrt");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void negative_radicand(std::int64_t order) {
  throw BranchError("radical expression: root of order " + std::to_string(order) +
                    " of a negative radicand has no real principal value");
}

// Real q-th root, principal branch.
double real_root(double x, std::int64_t q) {
  if (q == 1) return x;
  if (x < 0.0) {
    if (q % 2 == 0) negative_radicand(q);
    return -real_root(-x, q);
  }
  if (q == 2) return std::sqrt(x);
  if (q == 3) return std::cbrt(x);
  return std::pow(x, 1.0 / static_cast<double>(q));
}

BigReal real_root(const BigReal& x, std::int64_t q) {
  if (q == 1) return x;
  if (x.sign() < 0 && q % 2 == 0) negative_radicand(q);
  if (q == 2) return sqrt(x);
  if (q == 3) return cbrt(x);
  return nth_root(x, static_cast<unsigned long>(q));
}

double integer_power(double x, std::int64_t p) { return std::pow(x, static_cast<double>(p)); }
BigReal integer_power(const BigReal& x, std::int64_t p) { return pow(x, static_cast<long>(p)); }

// Evaluates the tree; `bits` is ignored for double.
template <typename T>
T evaluate(const Node& n, long bits) {
  const auto lit = [bits](std::int64_t v) -> T {
    if constexpr (std::is_same_v<T, double>) {
      return static_cast<double>(v);
    } else {
      return BigReal::from_integer(mpz_class(static_cast<long>(v)), bits);
    }
  };
  switch (n.kind) {
    case Node::Kind::kInteger:
      return lit(n.integer);
    case Node::Kind::kAdd:
      return evaluate<T>(*n.lhs, bits) + evaluate<T>(*n.rhs, bits);
    case Node::Kind::kSub:
      return evaluate<T>(*n.lhs, bits) - evaluate<T>(*n.rhs, bits);
    case Node::Kind::kMul:
      return evaluate<T>(*n.lhs, bits) * evaluate<T>(*n.rhs, bits);
    case Node::Kind::kDiv: {
      const T denom = evaluate<T>(*n.rhs, bits);
      if (denom == lit(0)) throw SingularDenominator("radical expression: division by zero");
      return evaluate<T>(*n.lhs, bits) / denom;
    }
    case Node::Kind::kNeg:
      return -evaluate<T>(*n.lhs, bits);
    case Node::Kind::kRoot:
      return real_root(evaluate<T>(*n.lhs, bits), n.q);
    case Node::Kind::kPow: {
      const T root = real_root(evaluate<T>(*n.lhs, bits), n.q);
      return integer_power(root, n.p);
    }
  }
  throw DomainError("radical expression: corrupt node");
}

}  // namespace

RadicalExpression RadicalExpression::parse(std::string_view text) {
  return RadicalExpression(Parser(text).parse(), std::string(text));
}

double RadicalExpression::value() const { return evaluate<double>(*root_, 53); }

BigReal RadicalExpression::value(long precision_bits) const {
  return evaluate<BigReal>(*root_, precision_bits);
}

}  // namespace quintell
