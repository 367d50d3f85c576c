#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tjurina/binary_form.hpp"
#include "tjurina/expr.hpp"
#include "tjurina/polynomial.hpp"

namespace testing {

using tjurina::Monomial;
using tjurina::Polynomial;
using tjurina::Scalar;

inline Polynomial aff(const std::string& text) { return tjurina::parse_poly(text, tjurina::Ambient::Affine2); }
inline Polynomial proj(const std::string& text) { return tjurina::parse_poly(text, tjurina::Ambient::Projective3); }

/// Small deterministic generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar nonzero_scalar(int bound = 5) {
    int num = 0;
    while (num == 0) num = integer(-bound, bound);
    const int den = coin() ? 1 : integer(1, 4);
    Scalar s(num, den);
    s.canonicalize();
    return s;
  }

  Scalar scalar(int bound = 5) { return integer(0, 4) == 0 ? Scalar(0) : nonzero_scalar(bound); }

  Monomial monomial(int nvars, int degree) {
    Monomial m(nvars);
    int left = degree;
    for (int i = 0; i + 1 < nvars; ++i) {
      const int e = integer(0, left);
      m.set(i, e);
      left -= e;
    }
    m.set(nvars - 1, left);
    return m;
  }

  Polynomial polynomial(int nvars, int max_degree, int max_terms) {
    std::vector<tjurina::Term> terms;
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) terms.push_back({monomial(nvars, integer(0, max_degree)), nonzero_scalar()});
    return Polynomial::from_terms(nvars, std::move(terms));
  }

  /// Random form of exact degree d (nonzero).
  Polynomial form(int nvars, int d, int max_terms) {
    for (;;) {
      std::vector<tjurina::Term> terms;
      const int n = integer(1, max_terms);
      for (int i = 0; i < n; ++i) terms.push_back({monomial(nvars, d), nonzero_scalar()});
      Polynomial f = Polynomial::from_terms(nvars, std::move(terms));
      if (!f.is_zero()) return f;
    }
  }

  /// Random squarefree binary form of degree m (rejection sampling).
  Polynomial squarefree_form(int m) {
    for (;;) {
      Polynomial g = form(2, m, m + 1);
      if (tjurina::squarefree_binary_form(g)) return g;
    }
  }

  /// Sum of random forms of degrees lo..hi, each present with probability 1/2.
  Polynomial tail(int lo, int hi) {
    Polynomial t(2);
    for (int d = lo; d <= hi; ++d) {
      if (coin()) t += form(2, d, 3);
    }
    return t;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline long binomial2(long m) { return m * (m - 1) / 2; }

}  // namespace testing
