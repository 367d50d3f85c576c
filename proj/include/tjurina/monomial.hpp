#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace tjurina {

/// Exponent vector x0^e0 * x1^e1 * x2^e2 over at most three variables.
/// The variable count is part of the value: monomials from different
/// ambient rings never compare equal.
class Monomial {
 public:
  static constexpr int kMaxVars = 3;

  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exponents);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int exponent);

  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_one() const { return degree() == 0; }

  /// True iff *this divides other.
  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  /// x_i^e in an nvars-variable ring.
  static Monomial power(int nvars, int var, int exponent);

  /// All monomials of total degree exactly `degree`.
  static std::vector<Monomial> of_degree(int nvars, int degree);

  /// Structural comparison (variable count, then exponents). Not a
  /// monomial order; use MonomialOrder for that.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  [[nodiscard]] std::size_t hash() const;

 private:
  std::array<int, kMaxVars> exps_{};
  int nvars_ = 0;
};

/// Standard variable names: x, y for two variables; x0, x1, x2 for three.
std::string variable_name(int nvars, int var);

/// "x^2*y", "1" for the unit monomial.
std::string to_string(const Monomial& m);

}  // namespace tjurina

template <>
struct std::hash<tjurina::Monomial> {
  std::size_t operator()(const tjurina::Monomial& m) const noexcept { return m.hash(); }
};
