#include "gf2lights/diagrange.hpp"

#include <string>

#include "gf2lights/errors.hpp"

namespace gf2lights {

Gf2Vector diagonal(const Gf2Matrix& a) {
  if (!a.square()) {
    throw DimensionMismatch("diagonal of a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  Gf2Vector d(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.get(i, i)) d.set(i);
  }
  return d;
}

Gf2Vector solve_diagonal(const Gf2Matrix& a) {
  if (!a.is_symmetric()) throw NotSymmetric("solve_diagonal requires a symmetric matrix");
  AffineSolutionSet s = solve(a, diagonal(a));
  if (!s.feasible) {
    throw InternalTheoremViolation("diagonal of a symmetric " + std::to_string(a.rows()) + "x" +
                                   std::to_string(a.cols()) + " matrix reported outside its range");
  }
  return std::move(s.particular);
}

bool certify_diagonal(const Gf2Matrix& a, const Gf2Vector& x) {
  return matvec(a, x) == diagonal(a);
}

}  // namespace gf2lights
