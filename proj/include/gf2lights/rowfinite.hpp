#pragma once

// Countably infinite symmetric matrices over GF(2) with finitely many ones in
// every row, described by a support generator. Row and column indices in this
// module start at 1.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "gf2lights/gf2.hpp"

namespace gf2lights {

// Eventually periodic block-tridiagonal matrix. Indices 1..P form the
// preamble; after it, cell t covers indices P + t*c + 1 .. P + (t+1)*c.
//
//   a[cell t, i][cell t, j]     = cell_diag(i, j)
//   a[cell t+1, i][cell t, j]   = cell_coupling(i, j)   (and its mirror)
//   a[q][r] for a preamble row q = 1 iff r is listed in preamble[q-1]
//
// Preamble rows may reach into the first cell (columns up to P + c); the
// cell side of those entries is mirrored automatically.
struct PeriodicSpec {
  std::size_t cell_size = 1;
  Gf2Matrix cell_diag = Gf2Matrix(1, 1);
  Gf2Matrix cell_coupling = Gf2Matrix(1, 1);
  std::vector<std::vector<std::size_t>> preamble;

  std::size_t preamble_size() const noexcept { return preamble.size(); }

  // Throws InvalidSpec unless the induced matrix is symmetric and well formed.
  void validate() const;

  std::vector<std::size_t> support(std::size_t row) const;

  // Standard single-cell specs.
  static PeriodicSpec identity();     // a_ij = [i == j]
  static PeriodicSpec closed_path();  // support(i) = {i-1, i, i+1}
  static PeriodicSpec open_path();    // support(i) = {i-1, i+1}
};

// Right-hand side b for an infinite system whose entries repeat per cell.
struct PeriodicTarget {
  Gf2Vector preamble;
  Gf2Vector cell;

  bool at(std::size_t preamble_size, std::size_t row) const;

  friend bool operator==(const PeriodicTarget&, const PeriodicTarget&) = default;
};

PeriodicTarget diagonal_target(const PeriodicSpec& spec);

enum class MatrixKind { ExplicitBanded, Periodic };

using SupportFn = std::function<std::vector<std::size_t>(std::size_t)>;

class RowFiniteMatrix {
 public:
  // `support(i)` must be pure and total for i >= 1.
  static RowFiniteMatrix from_generator(SupportFn support);
  static RowFiniteMatrix from_periodic(PeriodicSpec spec);

  MatrixKind kind() const noexcept { return kind_; }
  // The underlying spec for periodic matrices, nullptr otherwise.
  const PeriodicSpec* periodic() const noexcept { return spec_.get(); }

  // Sorted, duplicate-free column indices j with a_ij = 1.
  std::vector<std::size_t> support(std::size_t i) const;
  bool entry(std::size_t i, std::size_t j) const;
  bool diagonal_entry(std::size_t i) const { return entry(i, i); }

 private:
  MatrixKind kind_ = MatrixKind::ExplicitBanded;
  std::shared_ptr<const SupportFn> generator_;
  std::shared_ptr<const PeriodicSpec> spec_;
};

RowFiniteMatrix identity_diagonal_matrix();
RowFiniteMatrix closed_path_matrix();
RowFiniteMatrix open_path_matrix();
// Width-2 ladder: rungs {2r-1, 2r}; v is adjacent to v-2, v+2, its rung
// partner and itself.
RowFiniteMatrix closed_ladder_matrix();

// Leading principal submatrix of side `size` (0-based in the result).
Gf2Matrix window(const RowFiniteMatrix& m, std::size_t size);

// Minimal cut sequence k_1 < ... < k_count: k_s is the least integer above
// k_{s-1} such that rows 1..n+k_{s-1} have support inside [1, n+k_s].
std::vector<std::size_t> cut_points(const RowFiniteMatrix& m, std::size_t n, std::size_t count);

struct BlockDecomposition {
  std::size_t n = 0;
  std::vector<std::size_t> cuts;
  // D_n, D_{n+k_1}, ..., D_{n+k_m}.
  std::vector<Gf2Matrix> diag_blocks;
  // B_s couples rows of diagonal block s-1 to columns of diagonal block s.
  std::vector<Gf2Matrix> coupling_blocks;

  // n + k_s, with k_0 = 0.
  std::size_t boundary(std::size_t s) const { return n + (s == 0 ? 0 : cuts.at(s - 1)); }
};

// Throws SymmetryViolation when the covered window is not symmetric.
BlockDecomposition decompose(const RowFiniteMatrix& m, std::size_t n, std::size_t count);

// a_ij = 0 whenever i <= n+k_{s-1} and j > n+k_s (and mirrored), checked
// entry-wise for every row up to n+k_{last-1}.
bool zero_block_property(const RowFiniteMatrix& m, std::size_t n, const std::vector<std::size_t>& cuts);

bool check_symmetry_window(const RowFiniteMatrix& m, std::size_t size);

}  // namespace gf2lights
