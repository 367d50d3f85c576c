#pragma once

#include <span>
#include <vector>

#include "tjurina/monomial.hpp"
#include "tjurina/order.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

/// Monomial ideal kept as its minimal generating set (an antichain under
/// divisibility), sorted structurally so that equality is set equality.
/// No generators means the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars);
  MonomialIdeal(int nvars, std::vector<Monomial> generators);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::vector<Monomial>& generators() const { return gens_; }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }
  [[nodiscard]] bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

/// Generators plus the order they are a Groebner basis for. When `reduced`
/// holds the generators are monic, inter-reduced and sorted by leading
/// monomial, largest first.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators, bool reduced);

  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Polynomial>& generators() const { return gens_; }
  [[nodiscard]] bool reduced() const { return reduced_; }
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] int nvars() const { return order_.nvars(); }

 private:
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  bool reduced_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i b_i + r with no term of r divisible by
/// a leading monomial of the basis. Each step uses the first divisor in
/// list order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);

/// Remainder of divide() without tracking quotients.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);

/// (L/LT(g)) g - (L/LT(h)) h with L = lcm of the leading monomials and LT
/// including the leading coefficient.
Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by gens.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Reduced Groebner basis of (gens) + m^degree where m = (x0, ..., xn). The
/// computation runs in the finite-dimensional quotient by m^degree, so terms
/// of degree >= `degree` never materialize. Requires a degree-compatible order.
GroebnerBasis truncated_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, int degree);

/// Basis of a homogeneous ideal that is a Groebner basis in every degree
/// <= max_degree: S-pairs of higher degree are never formed.
GroebnerBasis homogeneous_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, int max_degree);

/// Minimal generators of the leading term ideal of a reduced basis.
MonomialIdeal leading_term_ideal(const GroebnerBasis& gb);

/// True iff every variable has a pure power in the ideal.
bool is_zero_dimensional(const MonomialIdeal& lt);

/// Buchberger's criterion: every S-polynomial of a pair reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Structural reducedness: monic, LT antichain, no tail term divisible by a
/// leading monomial, sorted by leading monomial descending.
bool is_structurally_reduced(const GroebnerBasis& gb);

}  // namespace tjurina
