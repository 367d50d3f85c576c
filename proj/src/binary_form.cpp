#include "tjurina/binary_form.hpp"

#include "tjurina/errors.hpp"
#include "tjurina/univariate.hpp"

namespace tjurina {

std::vector<Scalar> binary_form_coefficients(const Polynomial& g) {
  if (g.nvars() != 2) throw ArgumentError("binary form: two variables expected");
  if (g.is_zero()) throw ArgumentError("binary form: zero polynomial");
  if (!g.is_homogeneous()) throw ArgumentError("binary form: polynomial is not homogeneous");
  const int m = *g.degree();
  std::vector<Scalar> c(static_cast<std::size_t>(m + 1), 0);
  for (const Term& t : g.terms()) c[static_cast<std::size_t>(t.monomial[0])] = t.coeff;
  return c;
}

Scalar binary_form_resultant(const Polynomial& g, const Polynomial& h) {
  const auto cg = binary_form_coefficients(g);
  const auto ch = binary_form_coefficients(h);
  return sylvester_resultant(cg, static_cast<int>(cg.size()) - 1, ch, static_cast<int>(ch.size()) - 1);
}

bool squarefree_binary_form(const Polynomial& g) {
  const auto c = binary_form_coefficients(g);
  const int m = static_cast<int>(c.size()) - 1;
  // Power of x dividing g.
  int e = 0;
  while (sgn(c[static_cast<std::size_t>(e)]) == 0) ++e;
  if (e >= 2) return false;
  // g / x^e evaluated at x = 1: p(t) = sum c[i] t^(m-i), degree exactly m - e
  // because the coefficient of y^(m-e) is nonzero.
  std::vector<Scalar> p;
  for (int i = m; i >= e; --i) p.push_back(c[static_cast<std::size_t>(i)]);
  const UnivariatePolynomial poly(std::move(p));
  const int n = *poly.degree();
  if (n <= 1) return true;
  const UnivariatePolynomial dp = poly.derivative();
  return sgn(sylvester_resultant(poly.coeffs(), n, dp.coeffs(), n - 1)) != 0;
}

}  // namespace tjurina
