#pragma once

#include <optional>
#include <vector>

#include "tjurina/polynomial.hpp"

namespace tjurina {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Scalar> coeffs);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::optional<int> degree() const;
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Scalar& leading() const { return coeffs_.back(); }
  [[nodiscard]] Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  [[nodiscard]] UnivariatePolynomial derivative() const;
  [[nodiscard]] UnivariatePolynomial monic() const;
  [[nodiscard]] Scalar evaluate(const Scalar& t) const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// Remainder of Euclidean division; divisor must be nonzero.
UnivariatePolynomial remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Monic gcd (zero iff both inputs are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Determinant of the Sylvester matrix with formal degrees m and n; the
/// coefficient vectors may have vanishing leading entries.
Scalar sylvester_resultant(const std::vector<Scalar>& p, int m, const std::vector<Scalar>& q, int n);

/// Exact determinant by Gaussian elimination over Q.
Scalar determinant(std::vector<std::vector<Scalar>> matrix);

/// Exact rank by Gaussian elimination over Q.
int rank(std::vector<std::vector<Scalar>> matrix);

}  // namespace tjurina
