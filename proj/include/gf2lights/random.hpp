#pragma once

// Seeded generators for vectors and matrices, built on raw 64-bit engine
// draws only.

#include <cstdint>
#include <random>

#include "gf2lights/gf2.hpp"

namespace gf2lights {

using Rng = std::mt19937_64;

inline std::size_t random_below(Rng& rng, std::size_t bound) {
  // Rejection sampling on raw engine draws.
  const std::uint64_t b = bound;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return static_cast<std::size_t>(draw % b);
}

inline Gf2Vector random_vector(Rng& rng, std::size_t n) {
  Gf2Vector v(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng();
    if ((word >> (i % 64)) & 1u) v.set(i);
  }
  return v;
}

inline Gf2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Gf2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, random_vector(rng, cols));
  return m;
}

inline Gf2Matrix random_symmetric(Rng& rng, std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Gf2Vector upper = random_vector(rng, n);
    for (std::size_t j = i; j < n; ++j) {
      if (upper.get(j)) {
        m.set(i, j);
        m.set(j, i);
      }
    }
  }
  return m;
}

}  // namespace gf2lights
