#include "tjurina/family.hpp"

#include <algorithm>

#include "tjurina/errors.hpp"

namespace tjurina {

FamilyParams::FamilyParams(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a < 2) throw ArgumentError("family: a must be at least 2");
  if (b < 0 || c < 0) throw ArgumentError("family: b and c must be non-negative");
  if (b + c <= a) throw ArgumentError("family: b + c must exceed a");
  if (b_ < c_) {
    std::swap(b_, c_);
    swapped_ = true;
  }
}

Polynomial FamilyParams::curve() const {
  return Polynomial::monomial(Monomial{a_, 0}) + Polynomial::monomial(Monomial{0, a_}) +
         Polynomial::monomial(Monomial{b_, c_});
}

std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::BigB: return "BigB";
    case FamilyCase::A4: return "A4";
    case FamilyCase::B1: return "B1";
    case FamilyCase::B2: return "B2";
    case FamilyCase::B3: return "B3";
    case FamilyCase::B4: return "B4";
    case FamilyCase::B5: return "B5";
    case FamilyCase::C1: return "C1";
    case FamilyCase::C2: return "C2";
    case FamilyCase::C3: return "C3";
    case FamilyCase::C4: return "C4";
    case FamilyCase::C5: return "C5";
    case FamilyCase::C6: return "C6";
  }
  return "?";
}

FamilyCase family_case(const FamilyParams& p) {
  const int a = p.a();
  const int b = p.b();
  const int c = p.c();
  if (b >= a) return FamilyCase::BigB;

  // Column. For a = 3 the columns A and C coincide (b = 2); C wins, its
  // cell being the reduced one.
  char column = 0;
  if (b == a - 1) {
    column = 'C';
  } else if (2 * b == a + 1) {
    column = 'A';
  } else if (2 * b > a + 1) {
    column = 'B';
  }
  // Row; c = a - 1 is tested first for the same reason (a = 3, c = 2).
  int row = 0;
  if (c == a - 1) {
    row = 6;
  } else if (2 * c < a - 1) {
    row = 1;
  } else if (2 * c == a - 1) {
    row = 2;
  } else if (2 * c == a) {
    row = 3;
  } else if (2 * c == a + 1) {
    row = 4;
  } else if (c < a - 1) {
    row = 5;
  }

  using enum FamilyCase;
  switch (column) {
    case 'A':
      if (row == 4) return A4;
      break;
    case 'B': {
      static constexpr FamilyCase kB[] = {B1, B2, B3, B4, B5};
      if (row >= 1 && row <= 5) return kB[row - 1];
      break;
    }
    case 'C': {
      static constexpr FamilyCase kC[] = {C1, C2, C3, C4, C5, C6};
      if (row >= 1 && row <= 6) return kC[row - 1];
      break;
    }
    default:
      break;
  }
  throw ConsistencyError("family: parameters (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ") fall in an impossible table cell");
}

Polynomial family_generator(const FamilyParams& p, int index) {
  const int a = p.a();
  const int b = p.b();
  const int c = p.c();
  if (b >= a) throw ArgumentError("family generators are defined for b < a only");
  auto mono = [](int i, int j, long coeff = 1) { return Polynomial::monomial(Monomial{i, j}, coeff); };
  switch (index) {
    case 1:
      return mono(b - 1, c, b) + mono(a - 1, 0, a);
    case 2:
      return mono(b, c - 1, c) + mono(0, a - 1, a);
    case 3:
      return mono(a, 0);
    case 4:
      return mono(0, a);
    case 5:
      return mono(a - b - 1, a - 1);
    case 6:
      return mono(a - 1, a - c - 1);
    case 7:
      return mono(a - b, a - 1);
    default:
      throw ArgumentError("family generator index must be 1..7");
  }
}

namespace {

std::vector<int> cell_generators(FamilyCase fc) {
  using enum FamilyCase;
  switch (fc) {
    case B1:
    case B2:
    case C1:
    case C2:
      return {1, 2, 3, 4, 7};
    case B3:
      return {1, 2, 3, 4, 5};
    case C3:
    case C4:
    case C5:
      return {1, 3, 5, 6};
    case A4:
    case B4:
    case B5:
      return {1, 2, 3, 4, 5, 6};
    case C6:
      return {5, 6};
    case BigB:
      break;
  }
  return {};
}

}  // namespace

std::vector<Polynomial> predicted_gb(const FamilyParams& p) {
  const MonomialOrder grlex = MonomialOrder::grlex(2);
  const FamilyCase fc = family_case(p);
  std::vector<Polynomial> out;
  if (fc == FamilyCase::BigB) {
    out.push_back(Polynomial::monomial(Monomial{p.a() - 1, 0}));
    out.push_back(Polynomial::monomial(Monomial{0, p.a() - 1}));
  } else {
    for (int i : cell_generators(fc)) out.push_back(family_generator(p, i).monic(grlex));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& f, const Polynomial& g) {
    return grlex.greater(f.leading_term(grlex).monomial, g.leading_term(grlex).monomial);
  });
  return out;
}

MonomialIdeal predicted_lt_gens(const FamilyParams& p) {
  const int a = p.a();
  const int b = p.b();
  const int c = p.c();
  using enum FamilyCase;
  std::vector<Monomial> gens;
  switch (family_case(p)) {
    case BigB:
      gens = {{a - 1, 0}, {0, a - 1}};
      break;
    case B1:
    case B2:
    case C1:
    case C2:
      gens = {{b - 1, c}, {b, c - 1}, {a, 0}, {0, a}, {a - b, a - 1}};
      break;
    case B3:
      gens = {{b - 1, c}, {b, c - 1}, {a, 0}, {0, a}, {a - b - 1, a - 1}};
      break;
    case C3:
    case C4:
    case C5:
      gens = {{b - 1, c}, {a - b - 1, a - 1}, {a, 0}, {a - 1, a - c - 1}};
      break;
    case A4:
    case B4:
    case B5:
      gens = {{b - 1, c}, {b, c - 1}, {a, 0}, {0, a}, {a - b - 1, a - 1}, {a - 1, a - c - 1}};
      break;
    case C6:
      gens = {{a - b - 1, a - 1}, {a - 1, a - c - 1}};
      break;
  }
  return {2, std::move(gens)};
}

long tjurina_formula(const FamilyParams& p) {
  const long a = p.a();
  const long b = p.b();
  const long c = p.c();
  if (b >= a || (b == a - 1 && 2 * c >= a)) return (a - 1) * (a - 1);
  const long base = b * (a - 1) + c * (a + 1) - b * c;
  if (2 * b > a + 1 && b <= a - 1 && 2 * c <= a - 1) return base - a + 1;
  if (2 * b > a + 1 && b < a - 1 && 2 * c == a) return base - a;
  if (2 * b >= a + 1 && b < a - 1 && 2 * c >= a + 1 && c < a - 1) return b * (a - 1) + c * (a - 1) - b * c;
  throw ConsistencyError("tjurina_formula: no branch matches (" + std::to_string(a) + "," + std::to_string(b) +
                         "," + std::to_string(c) + ")");
}

MinTjurina min_tjurina(int a) {
  if (a < 2) throw ArgumentError("min_tjurina: a must be at least 2");
  const long value = (3L * a * a - 2L * a - 4) / 4;
  if (a % 2 == 0) return {value, FamilyParams(a, a / 2 + 1, a / 2)};
  return {value, FamilyParams(a, (a + 1) / 2, (a + 1) / 2)};
}

std::vector<FamilyParams> family_scan_params(int a, int b_max) {
  std::vector<FamilyParams> out;
  for (int b = 0; b <= b_max; ++b) {
    for (int c = 0; c <= b; ++c) {
      if (b + c > a) out.emplace_back(a, b, c);
    }
  }
  return out;
}

const std::vector<GapFixture>& gap_fixtures() {
  static const std::vector<GapFixture> fixtures{
      {"x^9+y^9+x^5*y^7+x^7*y^4", 59},
      {"x^10+y^10+x^3*y^8+x^7*y^5", 71},
      {"x^10+y^10+x^2*y^9+x^7*y^6", 74},
  };
  return fixtures;
}

}  // namespace tjurina
