#pragma once

// Bit-packed vectors and dense matrices over GF(2), with Gauss-Jordan
// elimination, solving, rank and nullspace.
//
// Bit i of a vector lives in bit (i % 64) of word (i / 64). Bits past the
// logical length in the last word are always zero.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2lights {

class Gf2Vector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t length);

  // Parses a string of '0' and '1' characters; bit 0 is the first character.
  static Gf2Vector from_string(std::string_view bits);
  static Gf2Vector ones(std::size_t length);
  static Gf2Vector unit(std::size_t length, std::size_t index);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const;
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true);
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i);

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }
  // Indices of the set bits, ascending.
  std::vector<std::size_t> support() const;

  std::span<const word_type> words() const noexcept { return words_; }

  Gf2Vector& operator^=(const Gf2Vector& other);
  Gf2Vector& operator&=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  friend Gf2Vector operator&(Gf2Vector a, const Gf2Vector& b) { return a &= b; }

  // The bits [begin, begin + length) as a new vector.
  Gf2Vector slice(std::size_t begin, std::size_t length) const;
  Gf2Vector prefix(std::size_t length) const { return slice(0, length); }
  // Concatenation: this followed by `tail`.
  Gf2Vector concat(const Gf2Vector& tail) const;

  std::string to_string() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

  // Lexicographic order in variable order, like comparing to_string() results.
  friend std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b);

 private:
  void clear_tail() noexcept;

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

// Inner product over GF(2).
bool dot(const Gf2Vector& a, const Gf2Vector& b);

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  // One string of '0'/'1' per row; all rows must have equal length.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value = true);
  void flip(std::size_t i, std::size_t j);

  const Gf2Vector& row(std::size_t i) const;
  void set_row(std::size_t i, Gf2Vector row);
  Gf2Vector column(std::size_t j) const;

  Gf2Matrix transposed() const;
  bool is_symmetric() const;

  // Rows [row0, row0 + nrows) and columns [col0, col0 + ncols).
  Gf2Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                      std::size_t ncols) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> data_;
};

// Solution set {particular ^ span(nullspace_basis)} of A x = b.
struct AffineSolutionSet {
  bool feasible = false;
  Gf2Vector particular;                 // defined iff feasible
  std::vector<Gf2Vector> nullspace_basis;
  // When infeasible: z with z^T A = 0 and dot(z, b) = 1.
  std::optional<Gf2Vector> witness;

  std::size_t nullity() const noexcept { return nullspace_basis.size(); }
  // Every solution, in Gray-code order starting at `particular`. Throws
  // std::length_error when the nullity exceeds `max_nullity`.
  std::vector<Gf2Vector> enumerate(std::size_t max_nullity = 20) const;
};

Gf2Vector matvec(const Gf2Matrix& a, const Gf2Vector& x);
Gf2Matrix matmul(const Gf2Matrix& a, const Gf2Matrix& b);

// Gauss-Jordan with the leftmost available pivot column, first available
// row. Free variables are zero in the particular solution.
AffineSolutionSet solve(const Gf2Matrix& a, const Gf2Vector& b);

// Solutions of A x = b whose first w.size() entries equal w; the returned
// vectors have full length A.cols().
AffineSolutionSet solve_with_prefix(const Gf2Matrix& a, const Gf2Vector& b,
                                    const Gf2Vector& w);

std::vector<Gf2Vector> nullspace(const Gf2Matrix& a);
std::size_t rank(const Gf2Matrix& a);

// Reduced row echelon form, the pivot column of each nonzero row, and the
// invertible row transform with transform * A = reduced.
struct Echelon {
  Gf2Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  Gf2Matrix transform;
};
Echelon reduced_echelon(const Gf2Matrix& a);

// z^T A z over GF(2).
bool quadratic_form(const Gf2Matrix& a, const Gf2Vector& z);

// First `j` entries of column `i`, with `i` counted from 1.
Gf2Vector column_cut(const Gf2Matrix& a, std::size_t i, std::size_t j);

}  // namespace gf2lights
