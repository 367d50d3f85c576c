#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tjurina/polynomial.hpp"
#include "tjurina/zerodim.hpp"

namespace tjurina {

// Outcomes of the double-point classifier.
struct SimplePoint {
  /// Tangent line tangent_x * x + tangent_y * y = 0 (the linear part at P).
  Scalar tangent_x;
  Scalar tangent_y;
  friend bool operator==(const SimplePoint&, const SimplePoint&) = default;
};
struct DoubleA {
  int n;
  friend bool operator==(const DoubleA&, const DoubleA&) = default;
};
struct MultiplicityAtLeast3 {
  int m;
  friend bool operator==(const MultiplicityAtLeast3&, const MultiplicityAtLeast3&) = default;
};

struct ClassificationOutcome {
  std::variant<SimplePoint, DoubleA, MultiplicityAtLeast3> verdict;
  /// (r, alpha_r) pairs from r = 2 on; empty unless P is a double point.
  TruncationTrace trace;
};

std::string to_string(const ClassificationOutcome& c);

enum class PointKind { OffCurve, SmoothPoint, DoublePoint, OrdinaryMultiple, NonOrdinaryMultiple };

struct Classification {
  PointKind kind = PointKind::OffCurve;
  /// A_n index for double points (n = 1 is a node), multiplicity otherwise.
  int index = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string to_string(const Classification& c);

struct SingularityReport {
  AffinePoint point;
  int multiplicity = 0;
  bool is_on_curve = false;
  /// Only meaningful for multiplicity >= 2.
  std::optional<bool> ordinary;
  std::optional<long> tjurina;
  std::optional<long> milnor;
  std::optional<int> symmetry_order;
  Classification classification;
  TruncationTrace trace_tjurina;
  TruncationTrace trace_milnor;
  /// Sub-computations that failed (e.g. non-isolated singularity).
  std::vector<std::string> errors;
};

/// Least k with a nonzero degree-k component at P; 0 when P is off the curve.
int multiplicity_at(const Polynomial& f, const AffinePoint& p);

/// Tangent cone at P is squarefree (m distinct lines). Requires m >= 2.
bool is_ordinary(const Polynomial& f, const AffinePoint& p);

/// Jacobian generators {g, g_x, g_y} of g = f translated so P is the origin.
std::vector<Polynomial> jacobian_generators(const Polynomial& f, const AffinePoint& p);
/// Milnor generators {g_x, g_y}.
std::vector<Polynomial> milnor_generators(const Polynomial& f, const AffinePoint& p);

/// Local Tjurina number: length at P of the Jacobian scheme.
LocalLength local_tjurina(const Polynomial& f, const AffinePoint& p);
/// Local Milnor number: length at P of the Milnor scheme.
LocalLength local_milnor(const Polynomial& f, const AffinePoint& p);

/// k such that every line through O meets the scheme in length exactly k,
/// quantified over all slopes symbolically; nullopt if no such k.
std::optional<int> k_symmetry_order(std::span<const Polynomial> gens);

/// The Milnor scheme at P is an (m-1)-slci: both partials have multiplicity
/// m - 1 at P and their tangent cones share no line.
bool is_slci(const Polynomial& f, const AffinePoint& p);

/// The double-point classifier: simple point with its tangent,
/// A_n double point, or multiplicity >= 3.
ClassificationOutcome classify_double_point(const Polynomial& f, const AffinePoint& p);

/// alpha_2 - 1 for a scheme supported at O: 0 reduced point, 1 curvilinear
/// tangent space, 2 fat tangent space.
int embedding_dimension(std::span<const Polynomial> gens);

/// True iff tau equals C(d-1, 2) - g.
bool nodes_only_check(int d, int g, long tau);

SingularityReport analyze(const Polynomial& f, const AffinePoint& p);

}  // namespace tjurina
