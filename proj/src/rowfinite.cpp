#include "gf2lights/rowfinite.hpp"

#include <algorithm>
#include <string>

#include "gf2lights/errors.hpp"

namespace gf2lights {

namespace {

void normalize(std::vector<std::size_t>& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

PeriodicSpec single_cell(bool diag, bool coupling) {
  PeriodicSpec s;
  s.cell_size = 1;
  s.cell_diag = Gf2Matrix(1, 1);
  s.cell_coupling = Gf2Matrix(1, 1);
  s.cell_diag.set(0, 0, diag);
  s.cell_coupling.set(0, 0, coupling);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// PeriodicSpec

void PeriodicSpec::validate() const {
  const std::size_t c = cell_size;
  if (c == 0) throw InvalidSpec("cell_size must be positive");
  if (cell_diag.rows() != c || cell_diag.cols() != c) throw InvalidSpec("cell_diag must be cell_size x cell_size");
  if (cell_coupling.rows() != c || cell_coupling.cols() != c) {
    throw InvalidSpec("cell_coupling must be cell_size x cell_size");
  }
  if (!cell_diag.is_symmetric()) throw InvalidSpec("cell_diag must be symmetric");
  const std::size_t p = preamble_size();
  for (std::size_t q = 1; q <= p; ++q) {
    for (std::size_t j : preamble[q - 1]) {
      if (j == 0 || j > p + c) {
        throw InvalidSpec("preamble row " + std::to_string(q) + " references column " + std::to_string(j) +
                          " outside 1.." + std::to_string(p + c));
      }
      if (j <= p) {
        const auto& mirror = preamble[j - 1];
        if (std::find(mirror.begin(), mirror.end(), q) == mirror.end()) {
          throw InvalidSpec("preamble entry (" + std::to_string(q) + "," + std::to_string(j) + ") has no mirror");
        }
      }
    }
  }
}

std::vector<std::size_t> PeriodicSpec::support(std::size_t row) const {
  if (row == 0) throw IndexOutOfRange("row indices start at 1");
  const std::size_t p = preamble_size();
  const std::size_t c = cell_size;
  std::vector<std::size_t> out;
  if (row <= p) {
    out = preamble[row - 1];
    normalize(out);
    return out;
  }
  const std::size_t t = (row - p - 1) / c;
  const std::size_t i = (row - p - 1) % c;
  const std::size_t base = p + t * c;
  if (t == 0) {
    for (std::size_t q = 1; q <= p; ++q) {
      const auto& s = preamble[q - 1];
      if (std::find(s.begin(), s.end(), row) != s.end()) out.push_back(q);
    }
  } else {
    for (std::size_t j = 0; j < c; ++j) {
      if (cell_coupling.get(i, j)) out.push_back(base - c + j + 1);
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (cell_diag.get(i, j)) out.push_back(base + j + 1);
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (cell_coupling.get(j, i)) out.push_back(base + c + j + 1);
  }
  normalize(out);
  return out;
}

PeriodicSpec PeriodicSpec::identity() { return single_cell(true, false); }
PeriodicSpec PeriodicSpec::closed_path() { return single_cell(true, true); }
PeriodicSpec PeriodicSpec::open_path() { return single_cell(false, true); }

bool PeriodicTarget::at(std::size_t preamble_size, std::size_t row) const {
  if (row == 0) throw IndexOutOfRange("row indices start at 1");
  if (row <= preamble_size) return preamble.get(row - 1);
  return cell.get((row - preamble_size - 1) % cell.size());
}

PeriodicTarget diagonal_target(const PeriodicSpec& spec) {
  PeriodicTarget t{Gf2Vector(spec.preamble_size()), Gf2Vector(spec.cell_size)};
  for (std::size_t q = 1; q <= spec.preamble_size(); ++q) {
    const auto& s = spec.preamble[q - 1];
    if (std::find(s.begin(), s.end(), q) != s.end()) t.preamble.set(q - 1);
  }
  for (std::size_t i = 0; i < spec.cell_size; ++i) {
    if (spec.cell_diag.get(i, i)) t.cell.set(i);
  }
  return t;
}

// ---------------------------------------------------------------------------
// RowFiniteMatrix

RowFiniteMatrix RowFiniteMatrix::from_generator(SupportFn support) {
  RowFiniteMatrix m;
  m.kind_ = MatrixKind::ExplicitBanded;
  m.generator_ = std::make_shared<const SupportFn>(std::move(support));
  return m;
}

RowFiniteMatrix RowFiniteMatrix::from_periodic(PeriodicSpec spec) {
  spec.validate();
  RowFiniteMatrix m;
  m.kind_ = MatrixKind::Periodic;
  m.spec_ = std::make_shared<const PeriodicSpec>(std::move(spec));
  return m;
}

std::vector<std::size_t> RowFiniteMatrix::support(std::size_t i) const {
  if (i == 0) throw IndexOutOfRange("row indices start at 1");
  if (spec_) return spec_->support(i);
  std::vector<std::size_t> s = (*generator_)(i);
  normalize(s);
  if (!s.empty() && s.front() == 0) throw InvalidSpec("support of row " + std::to_string(i) + " contains column 0");
  return s;
}

bool RowFiniteMatrix::entry(std::size_t i, std::size_t j) const {
  const auto s = support(i);
  return std::binary_search(s.begin(), s.end(), j);
}

RowFiniteMatrix identity_diagonal_matrix() { return RowFiniteMatrix::from_periodic(PeriodicSpec::identity()); }
RowFiniteMatrix closed_path_matrix() { return RowFiniteMatrix::from_periodic(PeriodicSpec::closed_path()); }
RowFiniteMatrix open_path_matrix() { return RowFiniteMatrix::from_periodic(PeriodicSpec::open_path()); }

RowFiniteMatrix closed_ladder_matrix() {
  return RowFiniteMatrix::from_generator([](std::size_t v) {
    std::vector<std::size_t> s{v, v + 2, v % 2 == 1 ? v + 1 : v - 1};
    if (v > 2) s.push_back(v - 2);
    return s;
  });
}

// ---------------------------------------------------------------------------
// Windows and block structure

Gf2Matrix window(const RowFiniteMatrix& m, std::size_t size) {
  Gf2Matrix w(size, size);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j : m.support(i)) {
      if (j > size) break;
      w.set(i - 1, j - 1);
    }
  }
  return w;
}

std::vector<std::size_t> cut_points(const RowFiniteMatrix& m, std::size_t n, std::size_t count) {
  if (n == 0) throw std::invalid_argument("cut_points: n must be positive");
  std::vector<std::size_t> cuts;
  cuts.reserve(count);
  std::size_t scanned = 0;  // rows 1..scanned already folded into max_col
  std::size_t max_col = 0;
  std::size_t prev = 0;
  for (std::size_t s = 1; s <= count; ++s) {
    const std::size_t rows_needed = n + prev;
    for (std::size_t i = scanned + 1; i <= rows_needed; ++i) {
      const auto sup = m.support(i);
      if (!sup.empty()) max_col = std::max(max_col, sup.back());
    }
    scanned = rows_needed;
    const std::size_t by_support = max_col > n ? max_col - n : 0;
    const std::size_t k = std::max(prev + 1, by_support);
    cuts.push_back(k);
    prev = k;
  }
  return cuts;
}

bool zero_block_property(const RowFiniteMatrix& m, std::size_t n, const std::vector<std::size_t>& cuts) {
  if (cuts.empty()) return true;
  const auto bound = [&](std::size_t s) { return n + (s == 0 ? 0 : cuts[s - 1]); };
  const std::size_t last = cuts.size();
  for (std::size_t i = 1; i <= bound(last); ++i) {
    const auto sup = m.support(i);
    for (std::size_t s = 1; s <= last; ++s) {
      // Rows above the (s-1)-th boundary stay left of the s-th boundary.
      if (i <= bound(s - 1) && !sup.empty() && sup.back() > bound(s)) return false;
      // Rows below the s-th boundary stay right of the (s-1)-th boundary.
      if (i > bound(s) && !sup.empty() && sup.front() <= bound(s - 1)) return false;
    }
  }
  return true;
}

bool check_symmetry_window(const RowFiniteMatrix& m, std::size_t size) {
  std::vector<std::vector<std::size_t>> rows(size + 1);
  for (std::size_t i = 1; i <= size; ++i) rows[i] = m.support(i);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j : rows[i]) {
      if (j > size) break;
      if (!std::binary_search(rows[j].begin(), rows[j].end(), i)) return false;
    }
  }
  return true;
}

BlockDecomposition decompose(const RowFiniteMatrix& m, std::size_t n, std::size_t count) {
  BlockDecomposition d;
  d.n = n;
  d.cuts = cut_points(m, n, count);
  const std::size_t extent = d.boundary(count);
  if (!check_symmetry_window(m, extent)) {
    throw SymmetryViolation("window of size " + std::to_string(extent) + " is not symmetric");
  }
  if (!zero_block_property(m, n, d.cuts)) {
    throw SymmetryViolation("zero-block property fails on the extracted range");
  }
  const Gf2Matrix a = window(m, extent);
  for (std::size_t s = 0; s <= count; ++s) {
    const std::size_t lo = s == 0 ? 0 : d.boundary(s - 1);
    const std::size_t hi = d.boundary(s);
    d.diag_blocks.push_back(a.submatrix(lo, lo, hi - lo, hi - lo));
    if (s > 0) {
      const std::size_t prev_lo = s == 1 ? 0 : d.boundary(s - 2);
      d.coupling_blocks.push_back(a.submatrix(prev_lo, lo, lo - prev_lo, hi - lo));
    }
  }
  return d;
}

}  // namespace gf2lights
