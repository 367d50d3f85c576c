#include "tjurina/polynomial.hpp"

#include <algorithm>

#include "tjurina/errors.hpp"

namespace tjurina {

namespace {

// grlex, x0 > x1 > x2: the fixed storage order.
bool canonical_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw ArgumentError("polynomial: mismatched variable counts");
}

// Merges b*sign into a; both sorted canonically.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Scalar(-b[j].coeff)});
      ++j;
    } else {
      Scalar c = a[i].coeff;
      if (sign > 0) c += b[j].coeff; else c -= b[j].coeff;
      if (sgn(c) != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Scalar& s) { return s.get_str(); }

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > Monomial::kMaxVars) {
    throw ArgumentError("polynomial: variable count must be 1..3");
  }
}

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
  return monomial(Monomial(nvars), c);
}

Polynomial Polynomial::variable(int nvars, int var) {
  return monomial(Monomial::power(nvars, var, 1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const Term& t : terms) {
    if (t.monomial.nvars() != nvars) throw ArgumentError("polynomial: term from another ring");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_greater(a.monomial, b.monomial);
  });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

std::optional<int> Polynomial::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || *degree() == *lowest_degree();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return canonical_greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw ArgumentError("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::truncated(int bound) const {
  Polynomial p(nvars_);
  for (const Term& t : terms_) {
    if (t.monomial.degree() < bound) p.terms_.push_back(t);
  }
  return p;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ArgumentError("evaluate: wrong point dimension");
  Scalar sum = 0;
  for (const Term& t : terms_) {
    Scalar v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), point[static_cast<std::size_t>(i)].get_num_mpz_t(),
                 static_cast<unsigned long>(t.monomial[i]));
      mpz_pow_ui(p.get_den_mpz_t(), point[static_cast<std::size_t>(i)].get_den_mpz_t(),
                 static_cast<unsigned long>(t.monomial[i]));
      v *= p;
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  const Scalar lc = leading_term(order).coeff;
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff /= lc;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(*this, other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(*this, other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.nvars_, std::move(products));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial partial_derivative(const Polynomial& f, int var) {
  if (var < 0 || var >= f.nvars()) throw ArgumentError("partial derivative: variable index out of range");
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial homogeneous_component(const Polynomial& f, int k) {
  if (k < 0) throw ArgumentError("homogeneous component: negative degree");
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.monomial.degree() == k) out.push_back(t);
  }
  return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial initial_form(const Polynomial& f) {
  if (f.is_zero()) return f;
  return homogeneous_component(f, *f.lowest_degree());
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw ArgumentError("substitute: wrong image count");
  const int target = images.empty() ? f.nvars() : images.front().nvars();
  // Cache powers per variable; exponents here stay small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Polynomial::constant(target, 1));
  auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const Term& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int e = t.monomial[static_cast<int>(i)];
      if (e > 0) term = term * power_of(i, e);
    }
    result += term;
  }
  return result;
}

Polynomial translate_to_origin(const Polynomial& f, const AffinePoint& p) {
  if (f.nvars() != 2) throw ArgumentError("translate_to_origin: affine (two-variable) polynomial expected");
  if (sgn(p.x) == 0 && sgn(p.y) == 0) return f;
  const std::vector<Polynomial> images{
      Polynomial::variable(2, 0) + Polynomial::constant(2, p.x),
      Polynomial::variable(2, 1) + Polynomial::constant(2, p.y),
  };
  return substitute(f, images);
}

}  // namespace tjurina
