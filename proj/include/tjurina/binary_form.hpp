#pragma once

#include <vector>

#include "tjurina/polynomial.hpp"

namespace tjurina {

/// Coefficients of a homogeneous two-variable form of degree m, indexed by
/// the power of x: g = sum c[i] x^i y^(m-i). Throws unless g is a nonzero form.
std::vector<Scalar> binary_form_coefficients(const Polynomial& g);

/// Resultant of two binary forms. Both dehomogenizations are taken with
/// their full formal degree, so a common factor y (a root at infinity)
/// also makes it vanish. Nonzero iff g and h share no linear factor.
Scalar binary_form_resultant(const Polynomial& g, const Polynomial& h);

/// True iff g splits into deg(g) pairwise distinct linear factors over C.
bool squarefree_binary_form(const Polynomial& g);

}  // namespace tjurina
