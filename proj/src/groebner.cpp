#include "tjurina/groebner.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <queue>

#include "tjurina/errors.hpp"

namespace tjurina {

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) {}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Monomial& m : generators) {
    if (m.nvars() != nvars) throw ArgumentError("monomial ideal: generator from another ring");
    const bool redundant = std::any_of(generators.begin(), generators.end(), [&](const Monomial& other) {
      return other != m && other.divides(m);
    });
    if (!redundant) gens_.push_back(m);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators, bool reduced)
    : order_(std::move(order)), gens_(std::move(generators)), reduced_(reduced) {}

namespace {

using Terms = std::vector<Term>;

// Polynomial arithmetic on term vectors sorted descending under one fixed
// order, optionally inside the quotient by m^bound.
class Engine {
 public:
  Engine(const MonomialOrder& order, int bound) : order_(order), bound_(bound) {}

  [[nodiscard]] Terms from(const Polynomial& p) const {
    Terms t;
    for (const Term& term : p.terms()) {
      if (term.monomial.degree() < bound_) t.push_back(term);
    }
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
    return t;
  }

  [[nodiscard]] static Polynomial to_poly(int nvars, Terms t) { return Polynomial::from_terms(nvars, std::move(t)); }

  // p[pfrom..] - c * q * g[gfrom..]
  [[nodiscard]] Terms sub_scaled(Terms& p, std::size_t pfrom, const Scalar& c, const Monomial& q, const Terms& g,
                                 std::size_t gfrom) const {
    Terms out;
    out.reserve(p.size() - pfrom + g.size() - gfrom);
    std::size_t i = pfrom;
    std::size_t j = gfrom;
    std::optional<Monomial> gm;
    auto next_g = [&]() {
      while (j < g.size()) {
        Monomial m = g[j].monomial * q;
        if (m.degree() < bound_) {
          gm = m;
          return;
        }
        ++j;
      }
      gm.reset();
    };
    next_g();
    while (i < p.size() || gm) {
      if (!gm) {
        out.push_back(std::move(p[i++]));
        continue;
      }
      if (i == p.size()) {
        out.push_back({*gm, -c * g[j].coeff});
        ++j;
        next_g();
        continue;
      }
      const auto cmp = order_.compare(p[i].monomial, *gm);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(std::move(p[i++]));
      } else if (cmp == std::strong_ordering::less) {
        out.push_back({*gm, -c * g[j].coeff});
        ++j;
        next_g();
      } else {
        Scalar v = p[i].coeff - c * g[j].coeff;
        if (sgn(v) != 0) out.push_back({p[i].monomial, std::move(v)});
        ++i;
        ++j;
        next_g();
      }
    }
    return out;
  }

  // Full reduction against monic basis elements (leading term first).
  [[nodiscard]] Terms normal_form(Terms p, const std::vector<Terms>& basis, std::size_t skip = SIZE_MAX) const {
    Terms rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Monomial& lm = p[pos].monomial;
      std::size_t k = 0;
      for (; k < basis.size(); ++k) {
        if (k != skip && !basis[k].empty() && basis[k].front().monomial.divides(lm)) break;
      }
      if (k == basis.size()) {
        rem.push_back(std::move(p[pos++]));
        continue;
      }
      const Scalar c = p[pos].coeff / basis[k].front().coeff;
      const Monomial q = lm / basis[k].front().monomial;
      p = sub_scaled(p, pos + 1, c, q, basis[k], 1);
      pos = 0;
    }
    return rem;
  }

  [[nodiscard]] Terms s_poly(const Terms& g, const Terms& h) const {
    const Monomial l = Monomial::lcm(g.front().monomial, h.front().monomial);
    Terms a;
    const Monomial qg = l / g.front().monomial;
    const Scalar cg = 1 / g.front().coeff;
    for (std::size_t i = 1; i < g.size(); ++i) {
      Monomial m = g[i].monomial * qg;
      if (m.degree() < bound_) a.push_back({m, g[i].coeff * cg});
    }
    return sub_scaled(a, 0, 1 / h.front().coeff, l / h.front().monomial, h, 1);
  }

  static void make_monic(Terms& t) {
    if (t.empty() || t.front().coeff == 1) return;
    const Scalar lc = t.front().coeff;
    for (Term& term : t) term.coeff /= lc;
  }

 private:
  const MonomialOrder& order_;
  int bound_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t seq;
};

GroebnerBasis run_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                             std::optional<int> truncate, std::optional<int> max_pair_degree) {
  const int nvars = order.nvars();
  for (const Polynomial& g : gens) {
    if (g.nvars() != nvars) throw ArgumentError("buchberger: generator from another ring");
  }
  const int bound = truncate.value_or(INT_MAX);
  const Engine engine(order, bound);

  std::vector<Terms> basis;
  for (const Polynomial& g : gens) {
    Terms t = engine.from(g);
    if (t.empty()) continue;
    Engine::make_monic(t);
    basis.push_back(std::move(t));
  }
  if (truncate) {
    for (const Monomial& m : Monomial::of_degree(nvars, *truncate)) basis.push_back(Terms{{m, 1}});
  }
  if (basis.empty()) throw ArgumentError("buchberger: all generators are zero");

  // Normal strategy: smallest lcm first, ties by creation order.
  auto later = [&](const Pair& a, const Pair& b) {
    const auto cmp = order.compare(a.lcm, b.lcm);
    return cmp == std::strong_ordering::greater || (cmp == std::strong_ordering::equal && a.seq > b.seq);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  std::size_t seq = 0;
  // pending[j][i] for i < j: pair still waiting to be processed.
  std::vector<std::vector<char>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      // Two monomials have a zero S-polynomial.
      if (basis[i].size() == 1 && basis[j].size() == 1) continue;
      Monomial l = Monomial::lcm(basis[i].front().monomial, basis[j].front().monomial);
      if (max_pair_degree && l.degree() > *max_pair_degree) continue;
      pending[j][i] = 1;
      queue.push({i, j, std::move(l), seq++});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending[b][a] != 0 : pending[a][b] != 0;
  };

  while (!queue.empty()) {
    const Pair pair = queue.top();
    queue.pop();
    pending[pair.j][pair.i] = 0;

    const Monomial& lm_i = basis[pair.i].front().monomial;
    const Monomial& lm_j = basis[pair.j].front().monomial;
    if (lm_i.coprime(lm_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].front().monomial.divides(pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    Terms h = engine.normal_form(engine.s_poly(basis[pair.i], basis[pair.j]), basis);
    if (h.empty()) continue;
    Engine::make_monic(h);
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another
  // (for equal leading monomials keep the first).
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& mk = basis[k].front().monomial;
      const Monomial& mi = basis[i].front().monomial;
      redundant = mk.divides(mi) && (mk != mi || k < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Terms tail(minimal[i].begin() + 1, minimal[i].end());
    Terms reduced_tail = engine.normal_form(std::move(tail), minimal, i);
    Terms g;
    g.reserve(reduced_tail.size() + 1);
    g.push_back(minimal[i].front());
    for (Term& t : reduced_tail) g.push_back(std::move(t));
    minimal[i] = std::move(g);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return order.greater(a.front().monomial, b.front().monomial); });

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (Terms& t : minimal) out.push_back(Engine::to_poly(nvars, std::move(t)));
  return {order, std::move(out), true};
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  if (basis.empty()) throw ArgumentError("divide: empty basis");
  for (const Polynomial& b : basis) {
    if (b.is_zero()) throw ArgumentError("divide: zero divisor polynomial");
    if (b.nvars() != f.nvars()) throw ArgumentError("divide: mismatched variable counts");
  }
  const Engine engine(order, INT_MAX);
  std::vector<Terms> divisors;
  for (const Polynomial& b : basis) divisors.push_back(engine.from(b));
  std::vector<Terms> quotients(basis.size());
  Terms p = engine.from(f);
  Terms rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Monomial lm = p[pos].monomial;
    std::size_t k = 0;
    while (k < divisors.size() && !divisors[k].front().monomial.divides(lm)) ++k;
    if (k == divisors.size()) {
      rem.push_back(std::move(p[pos++]));
      continue;
    }
    const Scalar c = p[pos].coeff / divisors[k].front().coeff;
    const Monomial q = lm / divisors[k].front().monomial;
    quotients[k].push_back({q, c});
    p = engine.sub_scaled(p, pos + 1, c, q, divisors[k], 1);
    pos = 0;
  }
  DivisionResult result{{}, Engine::to_poly(f.nvars(), std::move(rem))};
  for (Terms& q : quotients) result.quotients.push_back(Engine::to_poly(f.nvars(), std::move(q)));
  return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  return divide(f, basis, order).remainder;
}

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const MonomialOrder& order) {
  if (g.is_zero() || h.is_zero()) throw ArgumentError("s_polynomial: zero input");
  if (g.nvars() != h.nvars()) throw ArgumentError("s_polynomial: mismatched variable counts");
  const Engine engine(order, INT_MAX);
  return Engine::to_poly(g.nvars(), engine.s_poly(engine.from(g), engine.from(h)));
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  return run_buchberger(gens, order, std::nullopt, std::nullopt);
}

GroebnerBasis truncated_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, int degree) {
  if (!order.degree_compatible()) throw ArgumentError("truncated_buchberger: order must be degree-compatible");
  if (degree < 0) throw ArgumentError("truncated_buchberger: negative truncation degree");
  return run_buchberger(gens, order, degree, std::nullopt);
}

GroebnerBasis homogeneous_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, int max_degree) {
  if (!order.degree_compatible()) throw ArgumentError("homogeneous_buchberger: order must be degree-compatible");
  for (const Polynomial& g : gens) {
    if (!g.is_homogeneous()) throw ArgumentError("homogeneous_buchberger: generators must be homogeneous");
  }
  return run_buchberger(gens, order, std::nullopt, max_degree);
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb.generators()) lms.push_back(g.leading_term(gb.order()).monomial);
  return {gb.nvars(), std::move(lms)};
}

bool is_zero_dimensional(const MonomialIdeal& lt) {
  if (lt.is_zero()) return false;
  for (int v = 0; v < lt.nvars(); ++v) {
    const bool has_power = std::any_of(lt.generators().begin(), lt.generators().end(), [&](const Monomial& m) {
      return m.degree() == m[v];
    });
    if (!has_power) return false;
  }
  return true;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j], gb.order()), g, gb.order()).is_zero()) return false;
    }
  }
  return true;
}

bool is_structurally_reduced(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  const auto& order = gb.order();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero() || g[i].leading_term(order).coeff != 1) return false;
    if (i > 0 && !order.greater(g[i - 1].leading_term(order).monomial, g[i].leading_term(order).monomial)) {
      return false;
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == i) continue;
      const Monomial& lk = g[k].leading_term(order).monomial;
      for (const Term& t : g[i].terms()) {
        if (lk.divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

}  // namespace tjurina
