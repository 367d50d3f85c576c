#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/family.hpp"
#include "tjurina/groebner.hpp"
#include "tjurina/singularity.hpp"
#include "tjurina/zerodim.hpp"

using namespace tjurina;
using testing::aff;
using testing::proj;

namespace {

using Clock = std::chrono::steady_clock;

const AffinePoint O{};

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Collects failures while a criterion runs.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }

  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " violations, first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

Polynomial mono(int i, int j) { return Polynomial::monomial(Monomial{i, j}); }

std::string tuple_name(const FamilyParams& p) {
  return "(" + std::to_string(p.a()) + "," + std::to_string(p.b()) + "," + std::to_string(p.c()) + ")";
}

std::vector<FamilyParams> scan_range() {
  std::vector<FamilyParams> out;
  for (int a = 2; a <= 12; ++a) {
    for (const FamilyParams& p : family_scan_params(a, a + 2)) out.push_back(p);
  }
  return out;
}

long min_bound(long m) { return (3 * m * m - 2 * m - 4) / 4; }

bool same_set(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& g) { return std::find(b.begin(), b.end(), g) != b.end(); });
}

Polynomial through_origin(testing::Gen& gen, int max_degree) {
  Polynomial g(2);
  while (g.is_zero()) {
    std::vector<Term> terms;
    for (int k = gen.integer(1, 4); k > 0; --k) {
      terms.push_back({gen.monomial(2, gen.integer(1, max_degree)), gen.nonzero_scalar()});
    }
    g = Polynomial::from_terms(2, std::move(terms));
  }
  return g;
}

Outcome criterion1(double limit_s) {
  Checker c;
  double worst = 0;
  for (const auto& [text, expected] : std::vector<std::pair<const char*, long>>{
           {"x*y*(x-y)*(x+y)^2+x^6+y^6", 15}, {"x^5-y^5", 16}}) {
    const auto t0 = Clock::now();
    const long tau = local_tjurina(aff(text), O).length.value();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    worst = std::max(worst, s);
    c.expect(tau == expected, std::string(text) + " gave " + std::to_string(tau));
    c.expect(s < limit_s, std::string(text) + " too slow");
  }
  return c.outcome("introductory examples tau = 15, 16; slowest " + std::to_string(worst) + " s");
}

Outcome criterion2() {
  Checker c;
  long n = 0;
  for (const FamilyParams& p : scan_range()) {
    const long live = local_tjurina(p.curve(), O).length.value();
    c.expect(live == tjurina_formula(p), tuple_name(p));
    ++n;
  }
  return c.outcome(std::to_string(n) + " tuples, live tau == closed form");
}

Outcome criterion3() {
  Checker c;
  const auto grlex = MonomialOrder::grlex(2);
  long n = 0;
  for (const FamilyParams& p : scan_range()) {
    if (p.b() >= p.a()) continue;
    const Polynomial f = p.curve();
    const std::vector<Polynomial> gens{f, partial_derivative(f, 0), partial_derivative(f, 1)};
    const GroebnerBasis gb = buchberger(gens, grlex);
    std::vector<Polynomial> monic;
    for (const Polynomial& g : gb.generators()) monic.push_back(g.monic(grlex));
    c.expect(same_set(monic, predicted_gb(p)), tuple_name(p) + " basis");
    c.expect(leading_term_ideal(gb) == predicted_lt_gens(p), tuple_name(p) + " leading terms");
    ++n;
  }
  return c.outcome(std::to_string(n) + " tuples with b < a");
}

Outcome criterion4() {
  Checker c;
  for (int a = 2; a <= 12; ++a) {
    long best = -1;
    for (const FamilyParams& p : family_scan_params(a, a + 2)) {
      const long live = local_tjurina(p.curve(), O).length.value();
      if (best < 0 || live < best) best = live;
    }
    const long expected = min_bound(a);
    c.expect(best == expected, "a=" + std::to_string(a) + " min " + std::to_string(best));
    const FamilyParams arg = a % 2 == 0 ? FamilyParams(a, a / 2 + 1, a / 2) : FamilyParams(a, (a + 1) / 2, (a + 1) / 2);
    c.expect(local_tjurina(arg.curve(), O).length.value() == expected, "argmin " + tuple_name(arg));
    const MinTjurina m = min_tjurina(a);
    c.expect(m.value == expected, "min_tjurina(" + std::to_string(a) + ")");
  }
  c.expect(min_tjurina(2).value == 1, "tau_2");
  c.expect(min_tjurina(3).value == 4, "tau_3");
  return c.outcome("minima for 2 <= a <= 12, tau_2 = 1, tau_3 = 4");
}

Outcome criterion5(double limit_s) {
  Checker c;
  double worst = 0;
  for (const GapFixture& g : gap_fixtures()) {
    const auto t0 = Clock::now();
    const long tau = local_tjurina(aff(g.curve), O).length.value();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    worst = std::max(worst, s);
    c.expect(tau == g.expected_tau, g.curve + " gave " + std::to_string(tau));
    c.expect(s < limit_s, g.curve + " too slow");
  }
  c.expect(gap_fixtures().size() == 3, "three fixtures");
  return c.outcome("fixtures 59, 71, 74; slowest " + std::to_string(worst) + " s");
}

Outcome criterion6() {
  Checker c;
  const auto grlex = MonomialOrder::grlex(2);
  for (int n = 1; n <= 30; ++n) {
    const Polynomial f = mono(0, 2) - mono(n + 1, 0);
    const std::string name = "n=" + std::to_string(n);
    const ClassificationOutcome out = classify_double_point(f, O);
    const auto* a = std::get_if<DoubleA>(&out.verdict);
    c.expect(a != nullptr && a->n == n, name + " verdict");
    const std::vector<Polynomial> jac = jacobian_generators(f, O);
    c.expect(same_set(buchberger(jac, grlex).generators(), std::vector<Polynomial>{mono(0, 1), mono(n, 0)}),
             name + " basis");
    if (n >= 2) c.expect(embedding_dimension(jac) == 1, name + " embedding dimension");
  }
  return c.outcome("y^2 - x^(n+1) for 1 <= n <= 30");
}

Outcome criterion7() {
  Checker c;
  testing::Gen gen(7007);
  for (int m = 3; m <= 7; ++m) {
    for (int i = 0; i < 50; ++i) {
      const Polynomial f = gen.squarefree_form(m) + gen.tail(m + 1, m + 2);
      const std::string name = "m=" + std::to_string(m) + " #" + std::to_string(i);
      const long mu = local_milnor(f, O).length.value();
      const long tau = local_tjurina(f, O).length.value();
      const long mm = static_cast<long>(m - 1) * (m - 1);
      c.expect(mu == mm, name + " mu");
      c.expect(min_bound(m) <= tau && tau <= mm, name + " tau bounds");
      c.expect(k_symmetry_order(jacobian_generators(f, O)) == m - 1, name + " symmetry");
      c.expect(is_slci(f, O), name + " slci");
    }
  }
  return c.outcome("50 curves for each 3 <= m <= 7");
}

Outcome criterion8() {
  Checker c;
  testing::Gen gen(8008);
  int tested = 0;
  while (tested < 100) {
    std::vector<Polynomial> gens;
    for (int k = gen.integer(2, 3); k > 0; --k) gens.push_back(through_origin(gen, 6));
    LocalLength l{LengthResult::infinite(), {}};
    try {
      l = local_length_at_origin(gens);
    } catch (const AnalysisError&) {
      continue;
    }
    ++tested;
    for (const auto& [r, alpha] : l.trace.steps) {
      c.expect(local_length_oracle(gens, r) == alpha, "ideal #" + std::to_string(tested) + " r=" + std::to_string(r));
    }
  }
  return c.outcome("100 zero-dimensional ideals");
}

Outcome criterion9() {
  Checker c;
  for (const char* text : {"y^2-x^3", "y^2-x^4", "y^2-x^5", "x*y^2+x^4+y^4", "x*y*(x-y)*(x+y)^2+x^6+y^6"}) {
    const Polynomial f = aff(text);
    const long m = multiplicity_at(f, O);
    c.expect(local_tjurina(f, O).length.value() > testing::binomial2(m), text);
  }
  return c.outcome("cusp, tacnode, A_4, triple point, sextic");
}

Outcome criterion10() {
  Checker c;
  for (int d = 2; d <= 8; ++d) {
    const Polynomial f = proj("x1^" + std::to_string(d) + "-x2^" + std::to_string(d));
    const LengthResult r = global_tjurina(f);
    c.expect(r.is_finite() && r.value() == static_cast<long>(d - 1) * (d - 1), "d=" + std::to_string(d));
  }
  const LengthResult nodal = global_tjurina(proj("x1^2*x0-x2^2*(x2+x0)"));
  c.expect(nodal.is_finite() && nodal.value() == 1, "nodal cubic");
  const LengthResult conic = global_tjurina(proj("x0*x2-x1^2"));
  c.expect(conic.is_finite() && conic.value() == 0, "conic");
  c.expect(nodes_only_check(3, 0, 1), "nodes only");
  return c.outcome("x1^d - x2^d for 2 <= d <= 8, nodal cubic, conic");
}

Outcome criterion11() {
  Checker c;
  testing::Gen gen(1111);
  const auto drl = MonomialOrder::degrevlex(3);
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = gen.form(3, gen.integer(1, 6), 6);
    const std::vector<Polynomial> partials{partial_derivative(f, 0), partial_derivative(f, 1),
                                           partial_derivative(f, 2)};
    const GroebnerBasis gb = buchberger(partials, drl);
    c.expect(normal_form(f, gb.generators(), drl).is_zero(), "form #" + std::to_string(i));
  }
  return c.outcome("50 forms of degree <= 6");
}

struct Criterion {
  int id;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, 10, [] { return criterion1(5); }},
      {2, 600, criterion2},
      {3, 600, criterion3},
      {4, 600, criterion4},
      {5, 90, [] { return criterion5(30); }},
      {6, 30, criterion6},
      {7, 600, criterion7},
      {8, 600, criterion8},
      {9, 60, criterion9},
      {10, 60, criterion10},
      {11, 60, criterion11},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s >= cr.limit_s) {
      out.ok = false;
      out.detail += ", over time limit";
    }
    if (!out.ok) ++failed;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)\n", out.ok ? "PASS" : "FAIL", cr.id, out.detail.c_str(), s,
                cr.limit_s);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
