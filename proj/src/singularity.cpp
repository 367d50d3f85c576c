#include "tjurina/singularity.hpp"

#include <algorithm>
#include <map>

#include "tjurina/binary_form.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/expr.hpp"
#include "tjurina/univariate.hpp"

namespace tjurina {

namespace {

Polynomial at_origin(const Polynomial& f, const AffinePoint& p) {
  if (f.nvars() != 2) throw ArgumentError("affine (two-variable) curve expected");
  return translate_to_origin(f, p);
}

std::string point_text(const AffinePoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

LocalLength length_or_diagnose(std::span<const Polynomial> gens, const AffinePoint& p) {
  try {
    return local_length_at_origin(gens);
  } catch (const AnalysisError& e) {
    throw AnalysisError("curve not reduced at " + point_text(p) + ": " + e.what());
  }
}

// Coefficients c_j(t) of g(x, t*x) = sum_j c_j(t) x^j.
std::map<int, UnivariatePolynomial> slope_expansion(const Polynomial& g) {
  std::map<int, std::vector<Scalar>> raw;
  for (const Term& t : g.terms()) {
    auto& c = raw[t.monomial.degree()];
    const auto power = static_cast<std::size_t>(t.monomial[1]);
    if (c.size() <= power) c.resize(power + 1, 0);
    c[power] += t.coeff;
  }
  std::map<int, UnivariatePolynomial> out;
  for (auto& [j, c] : raw) {
    UnivariatePolynomial u(std::move(c));
    if (!u.is_zero()) out.emplace(j, std::move(u));
  }
  return out;
}

std::optional<int> symmetry_order_unchecked(std::span<const Polynomial> gens) {
  std::vector<std::map<int, UnivariatePolynomial>> expansions;
  std::optional<int> k;
  for (const Polynomial& g : gens) {
    expansions.push_back(slope_expansion(g));
    if (!expansions.back().empty()) {
      const int j = expansions.back().begin()->first;
      if (!k || j < *k) k = j;
    }
  }
  if (!k) return std::nullopt;
  // A common root t0 of the c_k(t) is a slope whose line meets the scheme
  // in length > k.
  UnivariatePolynomial common;
  for (const auto& e : expansions) {
    auto it = e.find(*k);
    if (it != e.end()) common = gcd(common, it->second);
  }
  if (*common.degree() != 0) return std::nullopt;
  const LengthResult vertical = line_restriction_length(gens, Line::vertical());
  if (vertical.is_infinite() || vertical.value() != *k) return std::nullopt;
  return k;
}

}  // namespace

std::string to_string(const ClassificationOutcome& c) {
  if (const auto* s = std::get_if<SimplePoint>(&c.verdict)) {
    const Polynomial tangent = Polynomial::monomial(Monomial{1, 0}, s->tangent_x) +
                               Polynomial::monomial(Monomial{0, 1}, s->tangent_y);
    return "simple point, tangent: " + render_poly(tangent) + " = 0";
  }
  if (const auto* a = std::get_if<DoubleA>(&c.verdict)) return "A_" + std::to_string(a->n);
  return "multiplicity >= 3 (m = " + std::to_string(std::get<MultiplicityAtLeast3>(c.verdict).m) + ")";
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case PointKind::OffCurve:
      return "not on curve";
    case PointKind::SmoothPoint:
      return "smooth point";
    case PointKind::DoublePoint:
      return c.index == 1 ? "A_1 (node)" : "A_" + std::to_string(c.index);
    case PointKind::OrdinaryMultiple:
      return "ordinary " + std::to_string(c.index) + "-fold point";
    case PointKind::NonOrdinaryMultiple:
      return "non-ordinary " + std::to_string(c.index) + "-fold point";
  }
  return "?";
}

int multiplicity_at(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("multiplicity of the zero polynomial");
  return *at_origin(f, p).lowest_degree();
}

bool is_ordinary(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("multiplicity of the zero polynomial");
  const Polynomial g = at_origin(f, p);
  const int m = *g.lowest_degree();
  if (m < 2) throw ArgumentError("is_ordinary: " + point_text(p) + " is not a singular point of the curve");
  return squarefree_binary_form(homogeneous_component(g, m));
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f, const AffinePoint& p) {
  const Polynomial g = at_origin(f, p);
  return {g, partial_derivative(g, 0), partial_derivative(g, 1)};
}

std::vector<Polynomial> milnor_generators(const Polynomial& f, const AffinePoint& p) {
  const Polynomial g = at_origin(f, p);
  return {partial_derivative(g, 0), partial_derivative(g, 1)};
}

LocalLength local_tjurina(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("local tjurina: zero polynomial");
  return length_or_diagnose(jacobian_generators(f, p), p);
}

LocalLength local_milnor(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("local milnor: zero polynomial");
  if (multiplicity_at(f, p) == 0) return {LengthResult::finite(0), {}};
  return length_or_diagnose(milnor_generators(f, p), p);
}

std::optional<int> k_symmetry_order(std::span<const Polynomial> gens) {
  try {
    (void)local_length_at_origin(gens);
  } catch (const AnalysisError& e) {
    throw ArgumentError(std::string("k_symmetry_order: scheme is not zero-dimensional at the origin: ") + e.what());
  }
  return symmetry_order_unchecked(gens);
}

bool is_slci(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("is_slci: zero polynomial");
  const Polynomial g = at_origin(f, p);
  const int m = *g.lowest_degree();
  if (m < 2) throw ArgumentError("is_slci: " + point_text(p) + " is not a singular point of the curve");
  const Polynomial gx = partial_derivative(g, 0);
  const Polynomial gy = partial_derivative(g, 1);
  if (gx.is_zero() || gy.is_zero()) return false;
  if (*gx.lowest_degree() != m - 1 || *gy.lowest_degree() != m - 1) return false;
  return sgn(binary_form_resultant(initial_form(gx), initial_form(gy))) != 0;
}

ClassificationOutcome classify_double_point(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("classify: zero polynomial");
  const Polynomial g = at_origin(f, p);
  if (sgn(g.coefficient(Monomial{0, 0})) != 0) {
    throw ArgumentError("classify: " + point_text(p) + " is not on the curve");
  }
  const Scalar a10 = g.coefficient(Monomial{1, 0});
  const Scalar a01 = g.coefficient(Monomial{0, 1});
  if (sgn(a10) != 0 || sgn(a01) != 0) return {SimplePoint{a10, a01}, {}};
  if (homogeneous_component(g, 2).is_zero()) return {MultiplicityAtLeast3{*g.lowest_degree()}, {}};

  const std::vector<Polynomial> jacobian{g, partial_derivative(g, 0), partial_derivative(g, 1)};
  const int cap = 4 * *g.degree() + 4;
  TruncationTrace trace;
  trace.steps.emplace_back(2, truncated_colength(jacobian, 2));
  for (int r = 3; r <= cap; ++r) {
    const long alpha = truncated_colength(jacobian, r);
    const long previous = trace.steps.back().second;
    trace.steps.emplace_back(r, alpha);
    if (alpha == previous) {
      trace.stabilized_at = r;
      return {DoubleA{static_cast<int>(previous)}, std::move(trace)};
    }
  }
  throw AnalysisError("classify: double point at " + point_text(p) + " is not isolated (curve not reduced)");
}

int embedding_dimension(std::span<const Polynomial> gens) {
  const long alpha2 = local_length_oracle(gens, 2);
  return alpha2 == 0 ? 0 : static_cast<int>(alpha2 - 1);
}

bool nodes_only_check(int d, int g, long tau) {
  if (d < 1 || g < 0 || tau < 0) throw ArgumentError("nodes_only_check: need d >= 1, g >= 0, tau >= 0");
  const long arithmetic_genus = static_cast<long>(d - 1) * (d - 2) / 2;
  if (arithmetic_genus - g < 0) throw ArgumentError("nodes_only_check: genus exceeds C(d-1, 2)");
  return tau == arithmetic_genus - g;
}

SingularityReport analyze(const Polynomial& f, const AffinePoint& p) {
  if (f.is_zero()) throw ArgumentError("analyze: zero polynomial");
  SingularityReport report;
  report.point = p;
  report.multiplicity = multiplicity_at(f, p);
  report.is_on_curve = report.multiplicity > 0;
  if (report.multiplicity >= 2) report.ordinary = is_ordinary(f, p);

  try {
    LocalLength tau = local_tjurina(f, p);
    report.tjurina = tau.length.value();
    report.trace_tjurina = std::move(tau.trace);
  } catch (const AnalysisError& e) {
    report.errors.push_back(std::string("tjurina: ") + e.what());
  }
  try {
    LocalLength mu = local_milnor(f, p);
    report.milnor = mu.length.value();
    report.trace_milnor = std::move(mu.trace);
  } catch (const AnalysisError& e) {
    report.errors.push_back(std::string("milnor: ") + e.what());
  }
  if (report.multiplicity >= 2 && report.tjurina) {
    report.symmetry_order = symmetry_order_unchecked(jacobian_generators(f, p));
  }

  switch (report.multiplicity) {
    case 0:
      report.classification = {PointKind::OffCurve, 0};
      break;
    case 1:
      report.classification = {PointKind::SmoothPoint, 0};
      break;
    case 2:
      report.classification = {PointKind::DoublePoint, report.tjurina ? static_cast<int>(*report.tjurina) : 0};
      break;
    default:
      report.classification = {*report.ordinary ? PointKind::OrdinaryMultiple : PointKind::NonOrdinaryMultiple,
                               report.multiplicity};
  }
  return report;
}

}  // namespace tjurina
