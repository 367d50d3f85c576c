#include "tjurina/univariate.hpp"

#include <utility>

#include "tjurina/errors.hpp"

namespace tjurina {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<int> UnivariatePolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Scalar> c = coeffs_;
  const Scalar lc = c.back();
  for (Scalar& v : c) v /= lc;
  return UnivariatePolynomial(std::move(c));
}

Scalar UnivariatePolynomial::evaluate(const Scalar& t) const {
  Scalar v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

UnivariatePolynomial remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw ArgumentError("polynomial remainder by zero");
  std::vector<Scalar> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  while (r.size() > db && !r.empty()) {
    const Scalar q = r.back() / d.back();
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= q * d[i];
    r.pop_back();
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial u = a;
  UnivariatePolynomial v = b;
  while (!v.is_zero()) {
    UnivariatePolynomial r = remainder(u, v);
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      const Scalar factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

int rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t row = r + 1; row < rows; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      const Scalar factor = m[row][col] / m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[row][k] -= factor * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Scalar sylvester_resultant(const std::vector<Scalar>& p, int m, const std::vector<Scalar>& q, int n) {
  if (m < 0 || n < 0) throw ArgumentError("resultant: negative formal degree");
  const auto size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  auto coeff = [](const std::vector<Scalar>& c, int i) -> Scalar {
    return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : Scalar(0);
  };
  std::vector<std::vector<Scalar>> s(size, std::vector<Scalar>(size, 0));
  // Rows hold coefficients from the top degree down.
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = coeff(p, m - k);
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) {
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = coeff(q, n - k);
    }
  }
  return determinant(std::move(s));
}

}  // namespace tjurina
