#include "gf2lights/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "gf2lights/errors.hpp"

namespace gf2lights {

namespace {

constexpr std::size_t W = Gf2Vector::word_bits;

std::size_t word_count(std::size_t bits) { return (bits + W - 1) / W; }

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

// ---------------------------------------------------------------------------
// Gf2Vector

Gf2Vector::Gf2Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

Gf2Vector Gf2Vector::ones(std::size_t length) {
  Gf2Vector v(length);
  std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
  v.clear_tail();
  return v;
}

Gf2Vector Gf2Vector::unit(std::size_t length, std::size_t index) {
  Gf2Vector v(length);
  v.set(index);
  return v;
}

bool Gf2Vector::get(std::size_t i) const {
  if (i >= length_) throw IndexOutOfRange("bit index " + std::to_string(i) + " >= " + std::to_string(length_));
  return (words_[i / W] >> (i % W)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
  if (i >= length_) throw IndexOutOfRange("bit index " + std::to_string(i) + " >= " + std::to_string(length_));
  const word_type mask = word_type{1} << (i % W);
  if (value) {
    words_[i / W] |= mask;
  } else {
    words_[i / W] &= ~mask;
  }
}

void Gf2Vector::flip(std::size_t i) {
  if (i >= length_) throw IndexOutOfRange("bit index " + std::to_string(i) + " >= " + std::to_string(length_));
  words_[i / W] ^= word_type{1} << (i % W);
}

bool Gf2Vector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t Gf2Vector::count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t Gf2Vector::find_next(std::size_t from) const noexcept {
  if (from >= length_) return length_;
  std::size_t wi = from / W;
  word_type w = words_[wi] & (~word_type{0} << (from % W));
  while (true) {
    if (w != 0) return wi * W + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return length_;
    w = words_[wi];
  }
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_first(); i < length_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.length_ != length_) throw DimensionMismatch("xor of vectors " + dims(length_, other.length_));
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

Gf2Vector& Gf2Vector::operator&=(const Gf2Vector& other) {
  if (other.length_ != length_) throw DimensionMismatch("and of vectors " + dims(length_, other.length_));
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

Gf2Vector Gf2Vector::slice(std::size_t begin, std::size_t length) const {
  if (begin > length_ || length > length_ - begin) {
    throw IndexOutOfRange("slice [" + std::to_string(begin) + ", +" + std::to_string(length) +
                          ") of length " + std::to_string(length_));
  }
  Gf2Vector out(length);
  const std::size_t shift = begin % W;
  const std::size_t first = begin / W;
  for (std::size_t k = 0; k < out.words_.size(); ++k) {
    word_type lo = words_[first + k] >> shift;
    if (shift != 0 && first + k + 1 < words_.size()) lo |= words_[first + k + 1] << (W - shift);
    out.words_[k] = lo;
  }
  out.clear_tail();
  return out;
}

Gf2Vector Gf2Vector::concat(const Gf2Vector& tail) const {
  Gf2Vector out(length_ + tail.length_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  for (std::size_t i = tail.find_first(); i < tail.length_; i = tail.find_next(i + 1)) out.set(length_ + i);
  return out;
}

std::string Gf2Vector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = find_first(); i < length_; i = find_next(i + 1)) s[i] = '1';
  return s;
}

void Gf2Vector::clear_tail() noexcept {
  if (length_ % W != 0 && !words_.empty()) words_.back() &= (word_type{1} << (length_ % W)) - 1;
}

std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b) {
  const std::size_t shared = std::min(a.length_, b.length_);
  for (std::size_t k = 0; k < word_count(shared); ++k) {
    Gf2Vector::word_type diff = a.words_[k] ^ b.words_[k];
    if ((k + 1) * W > shared) diff &= (Gf2Vector::word_type{1} << (shared % W)) - 1;
    if (diff == 0) continue;
    const std::size_t bit = k * W + static_cast<std::size_t>(std::countr_zero(diff));
    return a.get(bit) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.length_ <=> b.length_;
}

bool dot(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot of vectors " + dims(a.size(), b.size()));
  auto wa = a.words();
  auto wb = b.words();
  Gf2Vector::word_type acc = 0;
  for (std::size_t k = 0; k < wa.size(); ++k) acc ^= wa[k] & wb[k];
  return std::popcount(acc) & 1;
}

// ---------------------------------------------------------------------------
// Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("matrix row " + std::to_string(i + 1) + " has wrong length");
    m.data_[i] = Gf2Vector::from_string(rows[i]);
  }
  return m;
}

bool Gf2Matrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_) throw IndexOutOfRange("row " + std::to_string(i) + " >= " + std::to_string(rows_));
  return data_[i].get(j);
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_) throw IndexOutOfRange("row " + std::to_string(i) + " >= " + std::to_string(rows_));
  data_[i].set(j, value);
}

void Gf2Matrix::flip(std::size_t i, std::size_t j) {
  if (i >= rows_) throw IndexOutOfRange("row " + std::to_string(i) + " >= " + std::to_string(rows_));
  data_[i].flip(j);
}

const Gf2Vector& Gf2Matrix::row(std::size_t i) const {
  if (i >= rows_) throw IndexOutOfRange("row " + std::to_string(i) + " >= " + std::to_string(rows_));
  return data_[i];
}

void Gf2Matrix::set_row(std::size_t i, Gf2Vector row) {
  if (i >= rows_) throw IndexOutOfRange("row " + std::to_string(i) + " >= " + std::to_string(rows_));
  if (row.size() != cols_) throw DimensionMismatch("row length " + dims(row.size(), cols_));
  data_[i] = std::move(row);
}

Gf2Vector Gf2Matrix::column(std::size_t j) const {
  if (j >= cols_) throw IndexOutOfRange("column " + std::to_string(j) + " >= " + std::to_string(cols_));
  Gf2Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (data_[i].get(j)) c.set(i);
  }
  return c;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Gf2Vector& r = data_[i];
    for (std::size_t j = r.find_first(); j < cols_; j = r.find_next(j + 1)) t.data_[j].set(i);
  }
  return t;
}

bool Gf2Matrix::is_symmetric() const { return square() && transposed() == *this; }

Gf2Matrix Gf2Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                               std::size_t ncols) const {
  if (row0 > rows_ || nrows > rows_ - row0 || col0 > cols_ || ncols > cols_ - col0) {
    throw IndexOutOfRange("submatrix outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  Gf2Matrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) m.data_[i] = data_[row0 + i].slice(col0, ncols);
  return m;
}

std::vector<std::string> Gf2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(r.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

struct Reduction {
  std::vector<Gf2Vector> rows;       // reduced rows of A
  Gf2Vector rhs;                     // transformed right-hand side (may be empty)
  std::vector<Gf2Vector> transform;  // T with T A = reduced (empty unless tracked)
  std::vector<std::size_t> pivots;   // pivot column of reduced row k, k < rank
};

Reduction gauss_jordan(const Gf2Matrix& a, const Gf2Vector* b, bool track_transform) {
  Reduction r;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  r.rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) r.rows.push_back(a.row(i));
  if (b != nullptr) r.rhs = *b;
  if (track_transform) {
    r.transform.reserve(m);
    for (std::size_t i = 0; i < m; ++i) r.transform.push_back(Gf2Vector::unit(m, i));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && !r.rows[pivot].get(col)) ++pivot;
    if (pivot == m) continue;
    if (pivot != rank) {
      std::swap(r.rows[pivot], r.rows[rank]);
      if (b != nullptr) {
        const bool tmp = r.rhs.get(pivot);
        r.rhs.set(pivot, r.rhs.get(rank));
        r.rhs.set(rank, tmp);
      }
      if (track_transform) std::swap(r.transform[pivot], r.transform[rank]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || !r.rows[i].get(col)) continue;
      r.rows[i] ^= r.rows[rank];
      if (b != nullptr && r.rhs.get(rank)) r.rhs.flip(i);
      if (track_transform) r.transform[i] ^= r.transform[rank];
    }
    r.pivots.push_back(col);
    ++rank;
  }
  return r;
}

std::vector<Gf2Vector> kernel_from(const Reduction& r, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Gf2Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector v = Gf2Vector::unit(cols, f);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      if (r.rows[k].get(f)) v.set(r.pivots[k]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Gf2Vector matvec(const Gf2Matrix& a, const Gf2Vector& x) {
  if (x.size() != a.cols()) throw DimensionMismatch("matvec: x has length " + dims(x.size(), a.cols()));
  Gf2Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (dot(a.row(i), x)) out.set(i);
  }
  return out;
}

Gf2Matrix matmul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul inner dimension " + dims(a.cols(), b.rows()));
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Gf2Vector acc(b.cols());
    const Gf2Vector& r = a.row(i);
    for (std::size_t k = r.find_first(); k < r.size(); k = r.find_next(k + 1)) acc ^= b.row(k);
    out.set_row(i, std::move(acc));
  }
  return out;
}

AffineSolutionSet solve(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: b has length " + dims(b.size(), a.rows()));
  Reduction r = gauss_jordan(a, &b, /*track_transform=*/true);
  const std::size_t rank = r.pivots.size();

  AffineSolutionSet out;
  for (std::size_t i = rank; i < a.rows(); ++i) {
    if (r.rhs.get(i)) {
      out.witness = r.transform[i];
      return out;
    }
  }
  out.feasible = true;
  out.particular = Gf2Vector(a.cols());
  for (std::size_t k = 0; k < rank; ++k) {
    if (r.rhs.get(k)) out.particular.set(r.pivots[k]);
  }
  out.nullspace_basis = kernel_from(r, a.cols());
  return out;
}

AffineSolutionSet solve_with_prefix(const Gf2Matrix& a, const Gf2Vector& b, const Gf2Vector& w) {
  if (w.size() > a.cols()) throw DimensionMismatch("pinned prefix longer than variable count");
  const std::size_t p = w.size();
  const std::size_t rest = a.cols() - p;
  Gf2Vector shifted = b;
  shifted ^= matvec(a.submatrix(0, 0, a.rows(), p), w);
  AffineSolutionSet tail = solve(a.submatrix(0, p, a.rows(), rest), shifted);
  // An infeasible result keeps the witness of the reduced system (columns
  // after the pinned prefix, right-hand side shifted by the pinned part).
  if (!tail.feasible) return tail;
  AffineSolutionSet out;
  out.feasible = true;
  out.particular = w.concat(tail.particular);
  const Gf2Vector zeros(p);
  for (const auto& v : tail.nullspace_basis) out.nullspace_basis.push_back(zeros.concat(v));
  return out;
}

std::vector<Gf2Vector> AffineSolutionSet::enumerate(std::size_t max_nullity) const {
  if (!feasible) return {};
  if (nullity() > max_nullity) throw std::length_error("nullity " + std::to_string(nullity()) + " too large to enumerate");
  std::vector<Gf2Vector> out;
  out.reserve(std::size_t{1} << nullity());
  Gf2Vector cur = particular;
  out.push_back(cur);
  for (std::size_t g = 1; g < (std::size_t{1} << nullity()); ++g) {
    cur ^= nullspace_basis[static_cast<std::size_t>(std::countr_zero(g))];
    out.push_back(cur);
  }
  return out;
}

std::vector<Gf2Vector> nullspace(const Gf2Matrix& a) {
  return kernel_from(gauss_jordan(a, nullptr, false), a.cols());
}

std::size_t rank(const Gf2Matrix& a) { return gauss_jordan(a, nullptr, false).pivots.size(); }

Echelon reduced_echelon(const Gf2Matrix& a) {
  Reduction r = gauss_jordan(a, nullptr, true);
  Echelon e{Gf2Matrix(a.rows(), a.cols()), r.pivots, Gf2Matrix(a.rows(), a.rows())};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    e.reduced.set_row(i, std::move(r.rows[i]));
    e.transform.set_row(i, std::move(r.transform[i]));
  }
  return e;
}

bool quadratic_form(const Gf2Matrix& a, const Gf2Vector& z) {
  if (!a.square()) throw DimensionMismatch("quadratic form of a non-square matrix");
  return dot(z, matvec(a, z));
}

Gf2Vector column_cut(const Gf2Matrix& a, std::size_t i, std::size_t j) {
  if (i == 0 || i > a.cols()) throw IndexOutOfRange("column " + std::to_string(i) + " outside 1.." + std::to_string(a.cols()));
  if (j > a.rows()) throw IndexOutOfRange("cut row " + std::to_string(j) + " > " + std::to_string(a.rows()));
  Gf2Vector c(j);
  for (std::size_t r = 0; r < j; ++r) {
    if (a.get(r, i - 1)) c.set(r);
  }
  return c;
}

}  // namespace gf2lights
