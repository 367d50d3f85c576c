#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tjurina/monomial.hpp"
#include "tjurina/order.hpp"

namespace tjurina {

/// Exact rational coefficient. mpq_class keeps the fraction canonical
/// (positive denominator, lowest terms) after every arithmetic operation.
using Scalar = mpq_class;

std::string to_string(const Scalar& s);

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Affine point with rational coordinates.
struct AffinePoint {
  Scalar x{0};
  Scalar y{0};

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Multivariate polynomial over Q in 2 or 3 variables.
///
/// Terms are stored sorted strictly descending under the canonical order
/// (grlex with x0 > x1 > x2) with no zero coefficients, so equality is
/// structural. The zero polynomial has no terms and no degree.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 2);

  static Polynomial constant(int nvars, const Scalar& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(const Monomial& m, const Scalar& c = 1);
  /// Combines like terms and drops zeros; input may be in any order.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] std::span<const Term> terms() const { return terms_; }

  /// Highest total degree; nullopt for the zero polynomial.
  [[nodiscard]] std::optional<int> degree() const;
  /// Lowest total degree of a term (order of vanishing at the origin);
  /// nullopt for the zero polynomial.
  [[nodiscard]] std::optional<int> lowest_degree() const;
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] bool is_constant() const;

  [[nodiscard]] Scalar coefficient(const Monomial& m) const;
  /// Leading term under `order`. Requires a nonzero polynomial.
  [[nodiscard]] const Term& leading_term(const MonomialOrder& order) const;

  /// Terms of total degree < bound.
  [[nodiscard]] Polynomial truncated(int bound) const;
  [[nodiscard]] Scalar evaluate(std::span<const Scalar> point) const;
  [[nodiscard]] Polynomial pow(unsigned exponent) const;
  /// Divides every coefficient by the leading coefficient under `order`.
  [[nodiscard]] Polynomial monic(const MonomialOrder& order) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable `var`.
Polynomial partial_derivative(const Polynomial& f, int var);

/// Sum of the terms of total degree exactly k.
Polynomial homogeneous_component(const Polynomial& f, int k);

/// Lowest-degree nonzero homogeneous component (the tangent cone at O).
/// Zero for the zero polynomial.
Polynomial initial_form(const Polynomial& f);

/// g(x, y) = f(x + P.x, y + P.y), so that g(0,0) = f(P).
Polynomial translate_to_origin(const Polynomial& f, const AffinePoint& p);

/// Substitutes x_i -> images[i] (images share one ambient ring).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

}  // namespace tjurina
