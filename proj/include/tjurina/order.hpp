#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tjurina/monomial.hpp"

namespace tjurina {

enum class OrderKind { Lex, Grlex, Degrevlex };

/// A monomial order with an explicit variable precedence. precedence[0] is
/// the largest variable. grlex compares total degree first and breaks ties
/// lexicographically; degrevlex breaks ties by the smallest variable, where a
/// smaller exponent means a larger monomial.
class MonomialOrder {
 public:
  /// Identity precedence x0 > x1 > x2 (x > y in two variables).
  MonomialOrder(OrderKind kind, int nvars);
  MonomialOrder(OrderKind kind, std::vector<int> precedence);

  static MonomialOrder grlex(int nvars) { return {OrderKind::Grlex, nvars}; }
  static MonomialOrder lex(int nvars) { return {OrderKind::Lex, nvars}; }
  static MonomialOrder degrevlex(int nvars) { return {OrderKind::Degrevlex, nvars}; }

  [[nodiscard]] OrderKind kind() const { return kind_; }
  [[nodiscard]] int nvars() const { return static_cast<int>(precedence_.size()); }
  [[nodiscard]] const std::vector<int>& precedence() const { return precedence_; }
  [[nodiscard]] bool degree_compatible() const { return kind_ != OrderKind::Lex; }

  [[nodiscard]] std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<int> precedence_;
};

std::string to_string(OrderKind kind);

}  // namespace tjurina
