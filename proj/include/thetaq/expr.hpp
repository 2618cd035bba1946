#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "thetaq/cyclotomic.hpp"

namespace thetaq {

enum class Variable { a, b, q };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace node {

struct Sum {
  std::vector<ExprPtr> terms;
};
struct Product {
  std::vector<ExprPtr> factors;
};
struct Power {
  ExprPtr base;
  std::int64_t exponent;
};
struct ThetaCall {
  ExprPtr first;
  ExprPtr second;
};
struct Var {
  Variable name;
};
struct RootOfUnity {
  int order;
  std::int64_t exponent;
};
struct RationalConst {
  Rational value;
};
struct Negate {
  ExprPtr child;
};
struct RealPart {
  ExprPtr child;
};
struct ImagPart {
  ExprPtr child;
};
struct SpecializeQ {
  ExprPtr child;
};

}  // namespace node

/// Immutable parse tree of the identity language. Subtrees are shared.
struct Expr {
  using Node = std::variant<node::Sum, node::Product, node::Power, node::ThetaCall, node::Var,
                            node::RootOfUnity, node::RationalConst, node::Negate, node::RealPart,
                            node::ImagPart, node::SpecializeQ>;
  Node node;
};

/// Structural equality (same shape, same leaves).
bool operator==(const Expr& x, const Expr& y);

namespace build {

ExprPtr sum(std::vector<ExprPtr> terms);
ExprPtr product(std::vector<ExprPtr> factors);
ExprPtr power(ExprPtr base, std::int64_t exponent);
ExprPtr theta(ExprPtr first, ExprPtr second);
ExprPtr var(Variable v);
ExprPtr root(int order, std::int64_t exponent);
ExprPtr rational(Rational value);
ExprPtr negate(ExprPtr child);
ExprPtr real_part(ExprPtr child);
ExprPtr imag_part(ExprPtr child);
ExprPtr specialize_q(ExprPtr child);

}  // namespace build

// ---------------------------------------------------------------------------
// Surface syntax
//
//   identity := expr "=" expr ;
//   expr     := term (("+"|"-") term)* ;
//   term     := factor ("*" factor)* ;
//   factor   := ("-")? atom ("^" signed_integer)? ;
//   atom     := integer | integer "/" integer | "a" | "b" | "q" | "i" | "omega"
//             | "zeta" "(" integer "," signed_integer ")" | "f" "(" expr "," expr ")"
//             | "Re" "(" expr ")" | "Im" "(" expr ")" | "specq" "(" expr ")"
//             | "(" expr ")" ;

enum class TokenKind { ident, integer, slash, plus, minus, star, caret, lparen, rparen, comma, equals, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;
};

std::string_view to_string(TokenKind kind);

/// Throws ParseError(SyntaxError) on characters outside the alphabet.
std::vector<Token> tokenize(std::string_view text);

ExprPtr parse_expr(std::string_view text);
std::pair<ExprPtr, ExprPtr> parse_identity(std::string_view text);

/// Canonical rendering with the fewest parentheses that still reparse to a
/// structurally equal tree.
std::string print_expr(const Expr& e);

}  // namespace thetaq
