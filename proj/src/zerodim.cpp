#include "tjurina/zerodim.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tjurina/errors.hpp"
#include "tjurina/univariate.hpp"

namespace tjurina {

long LengthResult::value() const {
  if (!value_) throw AnalysisError("length is infinite (scheme is not zero-dimensional)");
  return *value_;
}

std::string to_string(const LengthResult& r) {
  return r.is_finite() ? std::to_string(r.value()) : std::string("infinite");
}

LengthResult staircase_length(const MonomialIdeal& lt) {
  if (!is_zero_dimensional(lt)) return LengthResult::infinite();
  const int n = lt.nvars();
  std::vector<int> bound(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int best = -1;
    for (const Monomial& m : lt.generators()) {
      if (m.degree() == m[v] && (best < 0 || m[v] < best)) best = m[v];
    }
    bound[static_cast<std::size_t>(v)] = best;
  }
  long count = 0;
  Monomial m(n);
  // Odometer over the box [0, bound_0) x ... x [0, bound_{n-1}).
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b == 0; })) return LengthResult::finite(0);
  for (;;) {
    for (int v = 0; v < n; ++v) m.set(v, e[static_cast<std::size_t>(v)]);
    if (!lt.contains(m)) ++count;
    int v = 0;
    while (v < n) {
      auto& ev = e[static_cast<std::size_t>(v)];
      if (++ev < bound[static_cast<std::size_t>(v)]) break;
      ev = 0;
      ++v;
    }
    if (v == n) break;
  }
  return LengthResult::finite(count);
}

namespace {

void check_affine(std::span<const Polynomial> gens) {
  if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); })) {
    throw ArgumentError("local length: all generators are zero");
  }
  for (const Polynomial& g : gens) {
    if (g.nvars() != 2) throw ArgumentError("local length: affine (two-variable) generators expected");
  }
}

}  // namespace

long truncated_colength(std::span<const Polynomial> gens, int r) {
  if (r < 1) throw ArgumentError("truncated colength: r must be positive");
  const int nvars = gens.empty() ? 2 : gens.front().nvars();
  const GroebnerBasis gb = truncated_buchberger(gens, MonomialOrder::grlex(nvars), r);
  return staircase_length(leading_term_ideal(gb)).value();
}

LocalLength local_length_at_origin(std::span<const Polynomial> gens) {
  check_affine(gens);
  int max_degree = 0;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) max_degree = std::max(max_degree, *g.degree());
  }
  const int cap = 4 * max_degree + 4;
  TruncationTrace trace;
  for (int r = 1; r <= cap; ++r) {
    const long alpha = truncated_colength(gens, r);
    if (!trace.steps.empty() && alpha < trace.steps.back().second) {
      throw ConsistencyError("truncation sequence decreased");
    }
    const bool stable = !trace.steps.empty() && trace.steps.back().second == alpha;
    trace.steps.emplace_back(r, alpha);
    if (stable) {
      trace.stabilized_at = r;
      return {LengthResult::finite(alpha), std::move(trace)};
    }
  }
  std::ostringstream msg;
  msg << "local length did not stabilize by r = " << cap
      << " (scheme not zero-dimensional at the origin); last alpha = " << trace.steps.back().second;
  throw AnalysisError(msg.str());
}

long local_length_oracle(std::span<const Polynomial> gens, int r) {
  if (r < 1) throw ArgumentError("local length oracle: r must be positive");
  for (const Polynomial& g : gens) {
    if (g.nvars() != 2) throw ArgumentError("local length oracle: affine generators expected");
  }
  std::map<Monomial, std::size_t> column;
  std::vector<Monomial> monomials;
  for (int d = 0; d < r; ++d) {
    for (const Monomial& m : Monomial::of_degree(2, d)) {
      column.emplace(m, monomials.size());
      monomials.push_back(m);
    }
  }
  std::vector<std::vector<Scalar>> rows;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    const int order = *g.lowest_degree();
    for (const Monomial& m : monomials) {
      if (m.degree() + order >= r) continue;
      std::vector<Scalar> row(monomials.size(), 0);
      for (const Term& t : g.terms()) {
        const Monomial product = t.monomial * m;
        if (product.degree() < r) row[column.at(product)] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(monomials.size()) - rank(std::move(rows));
}

std::vector<long> hilbert_function_values(std::span<const Polynomial> gens, int t_max) {
  if (t_max < 0) throw ArgumentError("hilbert function: negative degree");
  if (gens.empty()) throw ArgumentError("hilbert function: no generators");
  const int nvars = gens.front().nvars();
  for (const Polynomial& g : gens) {
    if (g.nvars() != nvars) throw ArgumentError("hilbert function: mismatched variable counts");
    if (!g.is_homogeneous()) throw ArgumentError("hilbert function: generator is not homogeneous");
  }
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  const MonomialIdeal lt = nonzero.empty()
                               ? MonomialIdeal(nvars)
                               : leading_term_ideal(homogeneous_buchberger(nonzero, MonomialOrder::degrevlex(nvars), t_max));
  std::vector<long> values;
  for (int t = 0; t <= t_max; ++t) {
    long count = 0;
    for (const Monomial& m : Monomial::of_degree(nvars, t)) {
      if (!lt.contains(m)) ++count;
    }
    values.push_back(count);
  }
  return values;
}

long hilbert_function(std::span<const Polynomial> gens, int t) { return hilbert_function_values(gens, t).back(); }

namespace {

// dim R/I <= 1 certified by the leading monomials of degree <= t_max: every
// pair of variables must carry the support of some leading monomial.
bool projectively_finite(std::span<const Polynomial> gens, int t_max) {
  const GroebnerBasis gb = homogeneous_buchberger(gens, MonomialOrder::degrevlex(3), t_max);
  const MonomialIdeal lt = leading_term_ideal(gb);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const int k = 3 - i - j;
      const bool covered = std::any_of(lt.generators().begin(), lt.generators().end(), [&](const Monomial& m) {
        return m.degree() <= t_max && m[k] == 0;
      });
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace

GlobalTjurina global_tjurina_detailed(const Polynomial& f) {
  if (f.nvars() != 3) throw ArgumentError("global tjurina: projective (three-variable) curve expected");
  if (f.is_zero() || !f.is_homogeneous()) throw ArgumentError("global tjurina: nonzero homogeneous polynomial expected");
  const int d = *f.degree();
  if (d < 2) throw ArgumentError("global tjurina: degree must be at least 2");

  std::vector<Polynomial> partials;
  for (int v = 0; v < 3; ++v) {
    Polynomial p = partial_derivative(f, v);
    if (!p.is_zero()) partials.push_back(std::move(p));
  }

  GlobalTjurina result{LengthResult::finite(0), {}, {}};
  int t_max = 3 * (d - 1);
  for (;;) {
    result.hilbert_values = hilbert_function_values(partials, t_max);
    const auto& hv = result.hilbert_values;
    const bool stable = hv.size() >= 3 && hv[hv.size() - 1] == hv[hv.size() - 2] && hv[hv.size() - 2] == hv[hv.size() - 3];
    if (stable && projectively_finite(partials, t_max)) {
      result.length = LengthResult::finite(hv.back());
      return result;
    }
    if (t_max + d > 6 * d) break;
    t_max += d;
    result.warnings.push_back("hilbert function window extended to t = " + std::to_string(t_max));
  }
  if (!projectively_finite(partials, t_max)) {
    result.length = LengthResult::infinite();
    result.warnings.push_back("jacobian scheme is not zero-dimensional (non-reduced curve)");
    return result;
  }
  std::ostringstream msg;
  msg << "hilbert function did not stabilize up to t = " << t_max << ":";
  for (long v : result.hilbert_values) msg << ' ' << v;
  throw AnalysisError(msg.str());
}

LengthResult global_tjurina(const Polynomial& f) { return global_tjurina_detailed(f).length; }

LengthResult line_restriction_length(std::span<const Polynomial> gens, const Line& line) {
  std::optional<long> best;
  for (const Polynomial& g : gens) {
    if (g.nvars() != 2) throw ArgumentError("line restriction: affine generators expected");
    std::map<int, Scalar> by_power;
    for (const Term& t : g.terms()) {
      if (line.slope) {
        mpq_class tj;
        mpz_pow_ui(tj.get_num_mpz_t(), line.slope->get_num_mpz_t(), static_cast<unsigned long>(t.monomial[1]));
        mpz_pow_ui(tj.get_den_mpz_t(), line.slope->get_den_mpz_t(), static_cast<unsigned long>(t.monomial[1]));
        by_power[t.monomial.degree()] += t.coeff * tj;
      } else if (t.monomial[0] == 0) {
        by_power[t.monomial[1]] += t.coeff;
      }
    }
    for (const auto& [power, coeff] : by_power) {
      if (sgn(coeff) != 0) {
        if (!best || power < *best) best = power;
        break;
      }
    }
  }
  return best ? LengthResult::finite(*best) : LengthResult::infinite();
}

}  // namespace tjurina
