#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gf2lights/errors.hpp"
#include "gf2lights/random.hpp"
#include "gf2lights/rowfinite.hpp"
#include "oracles.hpp"

using namespace gf2lights;

using Cuts = std::vector<std::size_t>;
using Rows = std::vector<std::string>;

TEST_CASE("periodic supports") {
  const auto path = closed_path_matrix();
  CHECK(path.support(1) == Cuts{1, 2});
  CHECK(path.support(5) == Cuts{4, 5, 6});
  const auto open = open_path_matrix();
  CHECK(open.support(1) == Cuts{2});
  CHECK(open.support(3) == Cuts{2, 4});
  CHECK(identity_diagonal_matrix().support(7) == Cuts{7});
  CHECK_THROWS_AS(path.support(0), IndexOutOfRange);
  CHECK(path.kind() == MatrixKind::Periodic);
  CHECK(closed_ladder_matrix().kind() == MatrixKind::ExplicitBanded);
  CHECK(closed_ladder_matrix().periodic() == nullptr);
}

TEST_CASE("preamble entries are mirrored into the first cell") {
  PeriodicSpec s = PeriodicSpec::closed_path();
  s.preamble = {{2, 3}, {1, 2, 3}};
  const auto m = RowFiniteMatrix::from_periodic(s);
  CHECK(m.support(1) == Cuts{2, 3});
  CHECK(m.support(3) == Cuts{1, 2, 3, 4});
  CHECK(m.support(4) == Cuts{3, 4, 5});
  CHECK(check_symmetry_window(m, 40));
  CHECK(diagonal_target(s).preamble.to_string() == "01");
}

TEST_CASE("spec validation") {
  PeriodicSpec s = PeriodicSpec::closed_path();
  s.preamble = {{2}, {}};
  CHECK_THROWS_AS(s.validate(), InvalidSpec);
  s.preamble = {{3}};
  CHECK_THROWS_AS(s.validate(), InvalidSpec);
  s = PeriodicSpec::closed_path();
  s.cell_size = 2;
  CHECK_THROWS_AS(s.validate(), InvalidSpec);
  s = PeriodicSpec{};
  s.cell_size = 2;
  s.cell_diag = Gf2Matrix::from_strings({"01", "00"});
  s.cell_coupling = Gf2Matrix(2, 2);
  CHECK_THROWS_AS(RowFiniteMatrix::from_periodic(s), InvalidSpec);
}

TEST_CASE("generator supports are normalized and checked") {
  const auto m = RowFiniteMatrix::from_generator([](std::size_t i) { return std::vector<std::size_t>{i + 1, i, i + 1}; });
  CHECK(m.support(3) == Cuts{3, 4});
  CHECK(m.entry(3, 4));
  CHECK_FALSE(m.entry(4, 3));
  const auto bad = RowFiniteMatrix::from_generator([](std::size_t) { return std::vector<std::size_t>{0}; });
  CHECK_THROWS_AS(bad.support(1), InvalidSpec);
}

TEST_CASE("windows") {
  CHECK(window(identity_diagonal_matrix(), 2) == Gf2Matrix::identity(2));
  CHECK(window(closed_path_matrix(), 3).to_strings() == Rows{"110", "111", "011"});
  CHECK(window(closed_ladder_matrix(), 4).to_strings() == Rows{"1110", "1101", "1011", "0111"});
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto m = RowFiniteMatrix::from_periodic(oracle::random_periodic_spec(rng, 3));
    const Gf2Matrix big = window(m, 30);
    CHECK(big.is_symmetric());
    CHECK(big.submatrix(0, 0, 17, 17) == window(m, 17));
    CHECK(window(m, 1).get(0, 0) == m.diagonal_entry(1));
  }
}

TEST_CASE("cut points on standard matrices") {
  CHECK(cut_points(identity_diagonal_matrix(), 1, 3) == Cuts{1, 2, 3});
  CHECK(cut_points(closed_path_matrix(), 2, 3) == Cuts{1, 2, 3});
  CHECK(cut_points(closed_ladder_matrix(), 2, 2) == Cuts{2, 4});
  CHECK(cut_points(closed_path_matrix(), 1, 0).empty());
  CHECK_THROWS_AS(cut_points(closed_path_matrix(), 0, 2), std::invalid_argument);
}

// Smallest k > prev such that rows 1..n+prev stay within columns 1..n+k.
std::size_t brute_next_cut(const RowFiniteMatrix& m, std::size_t n, std::size_t prev) {
  for (std::size_t k = prev + 1;; ++k) {
    bool ok = true;
    for (std::size_t i = 1; i <= n + prev && ok; ++i) {
      for (std::size_t j : m.support(i)) ok = ok && j <= n + k;
    }
    if (ok) return k;
  }
}

TEST_CASE("cut points are minimal and give zero blocks") {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const auto m = RowFiniteMatrix::from_periodic(oracle::random_periodic_spec(rng, 3));
    const std::size_t n = 1 + random_below(rng, 5);
    const Cuts cuts = cut_points(m, n, 6);
    std::size_t prev = 0;
    for (std::size_t k : cuts) {
      CHECK(k == brute_next_cut(m, n, prev));
      prev = k;
    }
    CHECK(zero_block_property(m, n, cuts));
  }
}

TEST_CASE("zero-block property detects a short cut") {
  // Rows 1..2 of the ladder reach column 4, so k_1 = 1 is too small.
  CHECK_FALSE(zero_block_property(closed_ladder_matrix(), 2, {1, 4}));
  CHECK(zero_block_property(closed_ladder_matrix(), 2, {2, 4}));
}

TEST_CASE("symmetry check") {
  const auto broken = RowFiniteMatrix::from_generator([](std::size_t i) {
    return i == 1 ? std::vector<std::size_t>{2} : std::vector<std::size_t>{};
  });
  CHECK_FALSE(check_symmetry_window(broken, 2));
  CHECK(check_symmetry_window(broken, 1));
  CHECK(check_symmetry_window(closed_path_matrix(), 50));
  CHECK(check_symmetry_window(closed_ladder_matrix(), 50));
  CHECK_THROWS_AS(decompose(broken, 1, 2), SymmetryViolation);
}

TEST_CASE("block decomposition examples") {
  const auto path = decompose(closed_path_matrix(), 1, 2);
  CHECK(path.cuts == Cuts{1, 2});
  REQUIRE(path.diag_blocks.size() == 3);
  REQUIRE(path.coupling_blocks.size() == 2);
  CHECK(path.diag_blocks[0].to_strings() == Rows{"1"});
  CHECK(path.coupling_blocks[0].to_strings() == Rows{"1"});
  CHECK(path.diag_blocks[1].to_strings() == Rows{"1"});

  const auto id = decompose(identity_diagonal_matrix(), 2, 2);
  for (const auto& b : id.coupling_blocks) CHECK(b.to_strings() == Rows(b.rows(), std::string(b.cols(), '0')));

  const auto ladder = decompose(closed_ladder_matrix(), 2, 2);
  CHECK(ladder.cuts == Cuts{2, 4});
  CHECK(ladder.diag_blocks[0].to_strings() == Rows{"11", "11"});
  CHECK(ladder.coupling_blocks[0].to_strings() == Rows{"10", "01"});
  CHECK(ladder.boundary(0) == 2);
  CHECK(ladder.boundary(2) == 6);
}

TEST_CASE("blocks tile the window") {
  Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const auto m = RowFiniteMatrix::from_periodic(oracle::random_periodic_spec(rng, 3));
    const std::size_t n = 1 + random_below(rng, 4);
    const auto d = decompose(m, n, 4);
    const Gf2Matrix w = window(m, d.boundary(4));
    for (std::size_t s = 0; s <= 4; ++s) {
      const std::size_t lo = s == 0 ? 0 : d.boundary(s - 1);
      CHECK(d.diag_blocks[s] == w.submatrix(lo, lo, d.boundary(s) - lo, d.boundary(s) - lo));
    }
    // Nothing outside the tridiagonal band.
    for (std::size_t s = 2; s <= 4; ++s) {
      const std::size_t lo = d.boundary(s - 1);
      const std::size_t far = s >= 2 ? d.boundary(s - 2) : 0;
      const std::size_t start = s >= 3 ? d.boundary(s - 3) : 0;
      CHECK(w.submatrix(start, lo, far - start, d.boundary(s) - lo).to_strings() ==
            Rows(far - start, std::string(d.boundary(s) - lo, '0')));
    }
  }
}

TEST_CASE("diagonal target") {
  const auto t = diagonal_target(PeriodicSpec::closed_path());
  CHECK(t.cell.to_string() == "1");
  CHECK(t.at(0, 5));
  CHECK(diagonal_target(PeriodicSpec::open_path()).cell.none());
  CHECK_THROWS_AS(t.at(0, 0), IndexOutOfRange);
}
