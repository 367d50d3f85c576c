#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/family.hpp"
#include "tjurina/groebner.hpp"

using namespace tjurina;
using testing::aff;

namespace {

std::vector<Polynomial> jacobian(const Polynomial& f) {
  return {f, partial_derivative(f, 0), partial_derivative(f, 1)};
}

std::vector<Polynomial> monic_all(std::vector<Polynomial> v, const MonomialOrder& order) {
  for (auto& g : v) g = g.monic(order);
  return v;
}

Polynomial mono(int i, int j) { return Polynomial::monomial(Monomial{i, j}); }

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("division examples") {
    const auto grlex = MonomialOrder::grlex(2);
    const FamilyParams p(9, 7, 3);
    std::vector<Polynomial> b1;
    for (int i : {1, 2, 3, 4, 7}) b1.push_back(family_generator(p, i));
    CHECK(divide(p.curve(), b1, grlex).remainder.is_zero());

    for (int a = 2; a <= 6; ++a) {
      const std::vector<Polynomial> basis{mono(a - 1, 0)};
      const DivisionResult r = divide(mono(a, 0), basis, grlex);
      CHECK(r.remainder.is_zero());
      CHECK(r.quotients.at(0) == aff("x"));
    }
    const std::vector<Polynomial> bx{aff("x")};
    const DivisionResult r = divide(aff("y"), bx, grlex);
    CHECK(r.remainder == aff("y"));
    CHECK(r.quotients.at(0).is_zero());
    CHECK_THROWS_AS(divide(aff("y"), std::vector<Polynomial>{}, grlex), ArgumentError);
    CHECK_THROWS_AS(divide(aff("y"), std::vector<Polynomial>{Polynomial(2)}, grlex), ArgumentError);
  }

  TEST_CASE("division identity on random inputs") {
    testing::Gen gen(1001);
    for (int i = 0; i < 100; ++i) {
      const int n = gen.coin() ? 2 : 3;
      const auto order = MonomialOrder(static_cast<OrderKind>(gen.integer(0, 2)), n);
      const Polynomial f = gen.polynomial(n, 6, 8);
      std::vector<Polynomial> basis;
      for (int k = gen.integer(1, 3); k > 0; --k) {
        Polynomial b = gen.polynomial(n, 3, 3);
        if (!b.is_zero()) basis.push_back(b);
      }
      if (basis.empty()) continue;
      const DivisionResult r = divide(f, basis, order);
      Polynomial sum = r.remainder;
      for (std::size_t k = 0; k < basis.size(); ++k) sum += r.quotients[k] * basis[k];
      CHECK(sum == f);
      for (const Term& t : r.remainder.terms()) {
        for (const Polynomial& b : basis) CHECK_FALSE(b.leading_term(order).monomial.divides(t.monomial));
      }
      CHECK(normal_form(f, basis, order) == r.remainder);
    }
  }

  TEST_CASE("S-polynomial examples") {
    const auto grlex = MonomialOrder::grlex(2);
    const int a = 9;
    const int b = 7;
    const int c = 3;
    const FamilyParams p(a, b, c);
    const Polynomial s = s_polynomial(family_generator(p, 1), family_generator(p, 2), grlex);
    // bc * S = ac x^a - ab y^a.
    CHECK(s * Scalar(b * c) == mono(a, 0) * Scalar(a * c) - mono(0, a) * Scalar(a * b));
    CHECK(s_polynomial(mono(a, 0), mono(0, a), grlex).is_zero());
    const Polynomial g = aff("x^3*y-2*y^2+1");
    CHECK(s_polynomial(g, g, grlex).is_zero());
  }

  TEST_CASE("Buchberger examples") {
    const auto grlex = MonomialOrder::grlex(2);
    const std::vector<Polynomial> an{aff("y^2-x^6"), aff("2*y"), aff("6*x^5")};
    const GroebnerBasis gb = buchberger(an, grlex);
    CHECK(gb.generators() == std::vector<Polynomial>{mono(5, 0), mono(0, 1)});
    CHECK(gb.reduced());

    const FamilyParams p(9, 7, 3);
    const GroebnerBasis fam = buchberger(jacobian(p.curve()), grlex);
    std::vector<Polynomial> expected;
    for (int i : {1, 2, 3, 4, 7}) expected.push_back(family_generator(p, i).monic(grlex));
    std::vector<Polynomial> got = fam.generators();
    CHECK(got.size() == expected.size());
    for (const Polynomial& e : expected) CHECK(std::find(got.begin(), got.end(), e) != got.end());

    const std::vector<Polynomial> single{aff("x^2")};
    CHECK(buchberger(single, grlex).generators() == single);
    CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{Polynomial(2)}, grlex), ArgumentError);
    CHECK_THROWS_AS(s_polynomial(Polynomial(2), aff("x"), grlex), ArgumentError);
    CHECK(buchberger(std::vector<Polynomial>{aff("x"), aff("x+1")}, grlex).generators() ==
          std::vector<Polynomial>{Polynomial::constant(2, 1)});
  }

  TEST_CASE("leading term ideal and zero dimensionality") {
    const auto grlex = MonomialOrder::grlex(2);
    const FamilyParams p(9, 7, 3);
    const MonomialIdeal lt = leading_term_ideal(buchberger(jacobian(p.curve()), grlex));
    CHECK(lt == MonomialIdeal(2, {{6, 3}, {7, 2}, {9, 0}, {0, 9}, {2, 8}}));
    CHECK(is_zero_dimensional(lt));

    const GroebnerBasis yx(grlex, {mono(5, 0), mono(0, 1)}, true);
    CHECK(leading_term_ideal(yx) == MonomialIdeal(2, {{0, 1}, {5, 0}}));
    for (int a = 2; a <= 6; ++a) {
      const GroebnerBasis big(grlex, {mono(a - 1, 0), mono(0, a - 1)}, true);
      CHECK(leading_term_ideal(big) == MonomialIdeal(2, {{a - 1, 0}, {0, a - 1}}));
    }
    CHECK_FALSE(is_zero_dimensional(MonomialIdeal(2, {{1, 0}})));
    CHECK_FALSE(is_zero_dimensional(MonomialIdeal(2)));
  }

  TEST_CASE("monomial ideal keeps minimal generators") {
    const MonomialIdeal m(2, {{2, 0}, {3, 1}, {0, 2}, {1, 1}, {1, 1}});
    CHECK(m.generators().size() == 3);
    CHECK(m.contains(Monomial{5, 5}));
    CHECK_FALSE(m.contains(Monomial{1, 0}));
  }

  TEST_CASE("random bases satisfy the criterion, contain the generators and ignore input order") {
    testing::Gen gen(1102);
    for (int i = 0; i < 60; ++i) {
      const int n = i % 3 == 0 ? 3 : 2;
      const auto order = MonomialOrder(static_cast<OrderKind>(gen.integer(0, 2)), n);
      std::vector<Polynomial> gens;
      for (int k = gen.integer(2, 3); k > 0; --k) gens.push_back(gen.polynomial(n, n == 2 ? 4 : 3, 3));
      const GroebnerBasis gb = buchberger(gens, order);
      CHECK(satisfies_buchberger_criterion(gb));
      CHECK(is_structurally_reduced(gb));
      for (const Polynomial& g : gens) CHECK(normal_form(g, gb.generators(), order).is_zero());
      for (int s = 0; s < 5; ++s) {
        std::vector<Polynomial> shuffled = gens;
        gen.shuffle(shuffled);
        CHECK(buchberger(shuffled, order).generators() == gb.generators());
      }
    }
  }

  TEST_CASE("shuffled generators give the same basis (50 shuffles)") {
    testing::Gen gen(1203);
    const auto grlex = MonomialOrder::grlex(2);
    const std::vector<Polynomial> gens = jacobian(aff("x*y*(x-y)*(x+y)^2+x^6+y^6"));
    std::vector<Polynomial> extended = gens;
    extended.push_back(gens[1] * aff("x+y") + gens[2]);
    const GroebnerBasis gb = buchberger(extended, grlex);
    for (int s = 0; s < 50; ++s) {
      std::vector<Polynomial> shuffled = extended;
      gen.shuffle(shuffled);
      CHECK(buchberger(shuffled, grlex).generators() == gb.generators());
    }
  }

  TEST_CASE("Euler membership on random forms") {
    testing::Gen gen(1304);
    const auto drl = MonomialOrder::degrevlex(3);
    for (int i = 0; i < 30; ++i) {
      const Polynomial f = gen.form(3, gen.integer(2, 5), 6);
      const std::vector<Polynomial> partials{partial_derivative(f, 0), partial_derivative(f, 1),
                                             partial_derivative(f, 2)};
      const GroebnerBasis gb = buchberger(partials, drl);
      CHECK(normal_form(f, gb.generators(), drl).is_zero());
    }
  }

  TEST_CASE("truncated basis equals the basis of the ideal plus a power of m") {
    testing::Gen gen(1405);
    const auto grlex = MonomialOrder::grlex(2);
    for (int i = 0; i < 30; ++i) {
      std::vector<Polynomial> gens;
      for (int k = gen.integer(1, 3); k > 0; --k) gens.push_back(gen.polynomial(2, 5, 4));
      const int r = gen.integer(1, 7);
      std::vector<Polynomial> with_power = gens;
      for (const Monomial& m : Monomial::of_degree(2, r)) with_power.push_back(Polynomial::monomial(m));
      CHECK(truncated_buchberger(gens, grlex, r).generators() == buchberger(with_power, grlex).generators());
    }
    CHECK_THROWS_AS(truncated_buchberger(std::vector<Polynomial>{aff("x")}, MonomialOrder::lex(2), 3), ArgumentError);
  }

  TEST_CASE("family bases are reduced and satisfy the criterion") {
    const auto grlex = MonomialOrder::grlex(2);
    for (int a = 2; a <= 8; ++a) {
      for (const FamilyParams& p : family_scan_params(a, a - 1)) {
        const GroebnerBasis gb = buchberger(jacobian(p.curve()), grlex);
        CHECK(satisfies_buchberger_criterion(gb));
        CHECK(is_structurally_reduced(gb));
        CHECK(monic_all(gb.generators(), grlex) == gb.generators());
      }
    }
  }
}
