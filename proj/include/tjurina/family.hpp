#pragma once

#include <string>
#include <vector>

#include "tjurina/groebner.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

/// Parameters of the curve x^a + y^a + x^b y^c. The constructor checks
/// a >= 2 and b + c > a, then swaps so that b >= c (x <-> y symmetry).
class FamilyParams {
 public:
  FamilyParams(int a, int b, int c);

  [[nodiscard]] int a() const { return a_; }
  [[nodiscard]] int b() const { return b_; }
  [[nodiscard]] int c() const { return c_; }
  /// True when the constructor exchanged b and c.
  [[nodiscard]] bool swapped() const { return swapped_; }

  /// x^a + y^a + x^b y^c with the normalized b >= c.
  [[nodiscard]] Polynomial curve() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  int a_;
  int b_;
  int c_;
  bool swapped_ = false;
};

/// Cells of the Groebner-basis table (column A/B/C by b, row 1..6 by c),
/// plus BigB for b >= a.
enum class FamilyCase { BigB, A4, B1, B2, B3, B4, B5, C1, C2, C3, C4, C5, C6 };

std::string to_string(FamilyCase c);

FamilyCase family_case(const FamilyParams& p);

/// The seven named generators f1..f7 (index 1..7); requires b < a.
Polynomial family_generator(const FamilyParams& p, int index);

/// Monic reduced Groebner basis of the Jacobian ideal predicted by the
/// table cell (grlex, x > y), sorted by leading monomial descending.
std::vector<Polynomial> predicted_gb(const FamilyParams& p);

/// Leading-term ideal generators predicted for the cell.
MonomialIdeal predicted_lt_gens(const FamilyParams& p);

/// Closed-form Tjurina number at the origin.
long tjurina_formula(const FamilyParams& p);

struct MinTjurina {
  long value;
  FamilyParams params;
};

/// floor((3a^2 - 2a - 4)/4) and the parameters that attain it.
MinTjurina min_tjurina(int a);

/// All normalized (a, b, c) with b + c > a, c <= b <= b_max.
std::vector<FamilyParams> family_scan_params(int a, int b_max);

/// Hard-coded curves with more than one mixed monomial whose Tjurina
/// numbers fill values missed by the family.
struct GapFixture {
  std::string curve;
  long expected_tau;
};
const std::vector<GapFixture>& gap_fixtures();

}  // namespace tjurina
