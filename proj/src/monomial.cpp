#include "tjurina/monomial.hpp"

#include <algorithm>

#include "tjurina/errors.hpp"

namespace tjurina {

Monomial::Monomial(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw ArgumentError("monomial: variable count must be 1..3");
  }
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(static_cast<int>(exponents.size())) {
  int i = 0;
  for (int e : exponents) set(i++, e);
}

void Monomial::set(int i, int exponent) {
  if (i < 0 || i >= nvars_) throw ArgumentError("monomial: variable index out of range");
  if (exponent < 0) throw ArgumentError("monomial: negative exponent");
  exps_[static_cast<std::size_t>(i)] = exponent;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < nvars_; ++i) d += exps_[static_cast<std::size_t>(i)];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < nvars_; ++i) {
    if ((*this)[i] > other[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < nvars_; ++i) {
    if ((*this)[i] > 0 && other[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < static_cast<std::size_t>(nvars_); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < static_cast<std::size_t>(nvars_); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.nvars_); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.nvars_); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  }
  return r;
}

Monomial Monomial::power(int nvars, int var, int exponent) {
  Monomial m(nvars);
  m.set(var, exponent);
  return m;
}

std::vector<Monomial> Monomial::of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 1) {
    out.push_back(Monomial{degree});
    return out;
  }
  if (nvars == 2) {
    for (int i = degree; i >= 0; --i) out.push_back(Monomial{i, degree - i});
    return out;
  }
  for (int i = degree; i >= 0; --i) {
    for (int j = degree - i; j >= 0; --j) out.push_back(Monomial{i, j, degree - i - j});
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = static_cast<std::size_t>(nvars_);
  for (int i = 0; i < nvars_; ++i) h = h * 1000003u + static_cast<std::size_t>((*this)[i]);
  return h;
}

std::string variable_name(int nvars, int var) {
  if (nvars == 2) return var == 0 ? "x" : "y";
  return "x" + std::to_string(var);
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(m.nvars(), i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace tjurina
