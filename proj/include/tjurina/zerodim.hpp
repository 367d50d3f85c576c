#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/groebner.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

/// Length of a zero-dimensional scheme, or Infinite when the scheme has
/// positive dimension.
class LengthResult {
 public:
  static LengthResult finite(long value) { return LengthResult(value); }
  static LengthResult infinite() { return LengthResult(std::nullopt); }

  [[nodiscard]] bool is_finite() const { return value_.has_value(); }
  [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
  /// Throws AnalysisError when infinite.
  [[nodiscard]] long value() const;

  friend bool operator==(const LengthResult&, const LengthResult&) = default;

 private:
  explicit LengthResult(std::optional<long> v) : value_(v) {}
  std::optional<long> value_;
};

std::string to_string(const LengthResult& r);

/// Sequence alpha_r = dim A / (I + m^r), r = 1, 2, ..., ending at the first
/// r with alpha_r = alpha_{r-1}.
struct TruncationTrace {
  std::vector<std::pair<int, long>> steps;
  /// The r at which alpha_r = alpha_{r-1} was observed.
  int stabilized_at = 0;

  friend bool operator==(const TruncationTrace&, const TruncationTrace&) = default;
};

struct LocalLength {
  LengthResult length;
  TruncationTrace trace;
};

/// Number of standard monomials (monomials outside the ideal).
LengthResult staircase_length(const MonomialIdeal& lt);

/// alpha_r = dim A/(I + m^r) via a truncated Groebner basis (grlex).
long truncated_colength(std::span<const Polynomial> gens, int r);

/// Length of the localization at the origin of A/(gens), A = Q[x,y]:
/// alpha_r is computed for r = 1, 2, ... until alpha_r = alpha_{r+1}.
/// Throws AnalysisError if no stabilization happens by r = 4*maxdeg + 4
/// (the scheme is not zero-dimensional at the origin).
LocalLength local_length_at_origin(std::span<const Polynomial> gens);

/// The same alpha_r from exact linear algebra on the coefficient matrix of
/// the truncated multiples m*g, deg(m) < r (independent of the Groebner engine).
long local_length_oracle(std::span<const Polynomial> gens, int r);

/// Hilbert function of Q[x0,x1,x2]/(gens) at degree t, for homogeneous gens.
long hilbert_function(std::span<const Polynomial> gens, int t);

/// Hilbert function values for t = 0..t_max from a single basis.
std::vector<long> hilbert_function_values(std::span<const Polynomial> gens, int t_max);

struct GlobalTjurina {
  LengthResult length;
  /// Hilbert function values t = 0, 1, ... that were inspected.
  std::vector<long> hilbert_values;
  /// Window extensions beyond 3(d-1), if any were needed.
  std::vector<std::string> warnings;
};

/// Degree of the projective Jacobian scheme of a plane curve: the eventual
/// value of the Hilbert function of Q[x0,x1,x2]/(d0 f, d1 f, d2 f).
GlobalTjurina global_tjurina_detailed(const Polynomial& f);
LengthResult global_tjurina(const Polynomial& f);

/// Line through the origin: y = slope * x, or the vertical line x = 0.
struct Line {
  std::optional<Scalar> slope;  // nullopt means vertical

  static Line with_slope(const Scalar& t) { return Line{t}; }
  static Line vertical() { return Line{std::nullopt}; }
};

/// Length at O of the scheme restricted to the line: the minimal order of
/// vanishing of the restricted generators. Infinite if they all vanish.
LengthResult line_restriction_length(std::span<const Polynomial> gens, const Line& line);

}  // namespace tjurina
