#pragma once

// Symbolic coefficient expressions over named parameters, as printed in the
// tables: numbers, identifiers, + - * / ^<int>, parentheses, cbrt(.), sqrt(.).
// Evaluation is exact; roots must come out exact in Q(i).

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocalg/errors.hpp"
#include "assocalg/scalar.hpp"

namespace assocalg {

using Assignment = std::map<std::string, Scalar>;

class Expr {
 public:
  enum class Kind { number, variable, negate, add, sub, mul, div, power, root };

  Expr() : Expr(Scalar(0)) {}
  explicit Expr(Scalar v) : node_(std::make_shared<Node>(Node{Kind::number, std::move(v)})) {
    source_ = node_->value.to_string();
  }

  static Expr parse(std::string_view text);

  const std::string& source() const { return source_; }

  Scalar eval(const Assignment& env) const { return eval(*node_, env); }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect(*node_, out, false, false);
    return out;
  }
  /// Variables occurring inside a cbrt or sqrt.
  std::set<std::string> root_variables() const {
    std::set<std::string> out;
    collect(*node_, out, true, false);
    return out;
  }
  bool is_constant() const { return variables().empty(); }

  /// Expressions compare by their normalized source text.
  friend bool operator==(const Expr& a, const Expr& b) { return a.source_ == b.source_; }

 private:
  struct Node {
    Kind kind;
    Scalar value;            // number
    std::string name;        // variable
    long exponent = 0;       // power; root degree
    std::vector<std::shared_ptr<const Node>> kids;
  };
  using NodePtr = std::shared_ptr<const Node>;

  class Parser;

  Expr(NodePtr n, std::string src) : node_(std::move(n)), source_(std::move(src)) {}

  static Scalar eval(const Node& n, const Assignment& env) {
    switch (n.kind) {
      case Kind::number:
        return n.value;
      case Kind::variable: {
        auto it = env.find(n.name);
        if (it == env.end()) throw unbound_parameter("no value for parameter '" + n.name + "'");
        return it->second;
      }
      case Kind::negate:
        return -eval(*n.kids[0], env);
      case Kind::add:
        return eval(*n.kids[0], env) + eval(*n.kids[1], env);
      case Kind::sub:
        return eval(*n.kids[0], env) - eval(*n.kids[1], env);
      case Kind::mul:
        return eval(*n.kids[0], env) * eval(*n.kids[1], env);
      case Kind::div: {
        Scalar d = eval(*n.kids[1], env);
        if (d.is_zero()) throw constraint_violated("denominator vanishes");
        return eval(*n.kids[0], env) / d;
      }
      case Kind::power: {
        Scalar b = eval(*n.kids[0], env);
        if (n.exponent < 0 && b.is_zero()) throw constraint_violated("negative power of zero");
        return b.pow(n.exponent);
      }
      case Kind::root: {
        Scalar x = eval(*n.kids[0], env);
        auto r = exact_root(x, static_cast<unsigned>(n.exponent));
        if (!r)
          throw inexact_root("root of degree " + std::to_string(n.exponent) + " of " +
                             x.to_string() + " is not exact");
        return *r;
      }
    }
    return Scalar(0);
  }

  static void collect(const Node& n, std::set<std::string>& out, bool only_roots, bool under_root) {
    if (n.kind == Kind::variable && (!only_roots || under_root)) out.insert(n.name);
    for (const auto& k : n.kids) collect(*k, out, only_roots, under_root || n.kind == Kind::root);
  }

  NodePtr node_;
  std::string source_;
};

class Expr::Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    auto n = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("expression '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static NodePtr make(Kind k, std::vector<NodePtr> kids, long e = 0) {
    Node n{k, Scalar(0)};
    n.kids = std::move(kids);
    n.exponent = e;
    return std::make_shared<const Node>(std::move(n));
  }

  NodePtr sum() {
    auto lhs = product();
    while (true) {
      if (eat('+'))
        lhs = make(Kind::add, {lhs, product()});
      else if (eat('-'))
        lhs = make(Kind::sub, {lhs, product()});
      else
        return lhs;
    }
  }
  NodePtr product() {
    auto lhs = unary();
    while (true) {
      if (eat('*'))
        lhs = make(Kind::mul, {lhs, unary()});
      else if (eat('/'))
        lhs = make(Kind::div, {lhs, unary()});
      else
        return lhs;
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Kind::negate, {unary()});
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    auto base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return make(Kind::power, {base}, neg ? -e : e);
  }
  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto n = sum();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Node n{Kind::number, Scalar(rational(mpz_class(std::string(s_.substr(start, pos_ - start)))))};
      return std::make_shared<const Node>(std::move(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "cbrt" || id == "sqrt") {
        if (!eat('(')) fail("expected '(' after " + id);
        auto arg = sum();
        if (!eat(')')) fail("expected ')'");
        return make(Kind::root, {arg}, id == "cbrt" ? 3 : 2);
      }
      Node n{Kind::variable, Scalar(0)};
      n.name = std::move(id);
      return std::make_shared<const Node>(std::move(n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Expr Expr::parse(std::string_view text) {
  std::string src;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  if (src.empty()) throw parse_error("empty expression");
  // Plain scalars (including Gaussian ones like 1+1/2*i) keep their value. A
  // bare `i` or `-i` is a parameter name here; some printed families use it.
  const bool has_digit =
      std::any_of(src.begin(), src.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  if (has_digit)
    if (auto v = try_parse_scalar(src)) return Expr(std::make_shared<const Node>(Node{Kind::number, *v}), src);
  Parser p(src);
  return Expr(p.parse_all(), src);
}

}  // namespace assocalg
