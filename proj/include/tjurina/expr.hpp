#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tjurina/order.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

/// Which variable names are legal: {x, y} or {x0, x1, x2}.
enum class Ambient { Affine2, Projective3 };

[[nodiscard]] constexpr int ambient_nvars(Ambient a) { return a == Ambient::Affine2 ? 2 : 3; }

class ExprSyntaxError : public std::runtime_error {
 public:
  ExprSyntaxError(std::size_t offset, std::string message, std::string expected);

  [[nodiscard]] std::size_t offset() const { return offset_; }
  [[nodiscard]] const std::string& message() const { return message_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string message_;
  std::string expected_;
};

/// Largest exponent accepted after `^`.
inline constexpr unsigned kMaxExponent = 1000;

/// Parses and fully expands a polynomial expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | variable | '(' expr ')'
///
/// Multiplication must be explicit: "2x" and "xy" are rejected.
Polynomial parse_poly(std::string_view text, Ambient ambient);

/// Canonical text: terms in strictly decreasing order under `order`,
/// unit coefficients elided next to variables. parse_poly inverts it.
std::string render_poly(const Polynomial& f, const MonomialOrder& order);

/// Rendering under grlex with the identity precedence.
std::string render_poly(const Polynomial& f);

/// Parses "p" or "p/q" with an optional leading '-'.
Scalar parse_scalar(std::string_view text);

}  // namespace tjurina
