#pragma once

// Independent reference implementations for tests: exhaustive enumeration
// over bit masks, with no elimination involved.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gf2lights/gf2.hpp"
#include "gf2lights/random.hpp"
#include "gf2lights/rowfinite.hpp"

namespace oracle {

using gf2lights::Gf2Matrix;
using gf2lights::Gf2Vector;

inline Gf2Vector from_mask(std::uint64_t mask, std::size_t n) {
  Gf2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) v.set(i);
  }
  return v;
}

inline bool naive_get(const Gf2Matrix& a, std::size_t i, std::size_t j) { return a.to_strings()[i][j] == '1'; }

inline Gf2Vector naive_matvec(const Gf2Matrix& a, const Gf2Vector& x) {
  const auto rows = a.to_strings();
  const std::string xs = x.to_string();
  Gf2Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc ^= (rows[i][j] == '1' && xs[j] == '1');
    if (acc) out.set(i);
  }
  return out;
}

// Every x with A x = b, as bit strings.
inline std::set<std::string> brute_solutions(const Gf2Matrix& a, const Gf2Vector& b) {
  std::set<std::string> out;
  const std::size_t n = a.cols();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Gf2Vector x = from_mask(mask, n);
    if (naive_matvec(a, x) == b) out.insert(x.to_string());
  }
  return out;
}

inline std::size_t brute_rank(const Gf2Matrix& a) {
  // |image| = 2^rank.
  std::set<std::string> image;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.cols()); ++mask) {
    image.insert(naive_matvec(a, from_mask(mask, a.cols())).to_string());
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < image.size()) ++r;
  return r;
}

// A symmetric periodic spec with cell size in [1, max_cell] and a preamble of
// up to `max_preamble` rows whose entries may reach into the first cell.
inline gf2lights::PeriodicSpec random_periodic_spec(gf2lights::Rng& rng, std::size_t max_cell,
                                                    std::size_t max_preamble = 3) {
  gf2lights::PeriodicSpec s;
  s.cell_size = 1 + gf2lights::random_below(rng, max_cell);
  const std::size_t c = s.cell_size;
  s.cell_diag = gf2lights::random_symmetric(rng, c);
  s.cell_coupling = gf2lights::random_matrix(rng, c, c);
  const std::size_t p = gf2lights::random_below(rng, max_preamble + 1);
  const Gf2Matrix pp = gf2lights::random_symmetric(rng, p);
  const Gf2Matrix pc = gf2lights::random_matrix(rng, p, c);
  s.preamble.assign(p, {});
  for (std::size_t q = 0; q < p; ++q) {
    for (std::size_t j = 0; j < p; ++j) {
      if (pp.get(q, j)) s.preamble[q].push_back(j + 1);
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (pc.get(q, j)) s.preamble[q].push_back(p + j + 1);
    }
  }
  return s;
}

// Every solution of the window system rows 1..rows, columns 1..cols of the
// infinite matrix, by enumeration.
inline std::vector<Gf2Vector> brute_window_solutions(const gf2lights::RowFiniteMatrix& m, std::size_t rows,
                                                     std::size_t cols, const std::vector<bool>& b) {
  std::vector<std::uint64_t> row_masks(rows, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j : m.support(i)) {
      if (j <= cols) row_masks[i - 1] |= std::uint64_t{1} << (j - 1);
    }
  }
  std::vector<Gf2Vector> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) ok = (__builtin_popcountll(row_masks[i] & x) & 1) == int(b[i]);
    if (ok) out.push_back(from_mask(x, cols));
  }
  return out;
}

}  // namespace oracle
