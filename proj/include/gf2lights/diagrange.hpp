#pragma once

// The diagonal of a symmetric matrix over GF(2) always lies in its range.
// These functions produce and check a preimage of the diagonal.

#include "gf2lights/gf2.hpp"

namespace gf2lights {

// d_i = a_ii. Throws DimensionMismatch for non-square input.
Gf2Vector diagonal(const Gf2Matrix& a);

// The canonical x with A x = diagonal(A): free variables zero under the
// elimination pivot rule. Throws NotSymmetric when A is not symmetric.
Gf2Vector solve_diagonal(const Gf2Matrix& a);

bool certify_diagonal(const Gf2Matrix& a, const Gf2Vector& x);

}  // namespace gf2lights
