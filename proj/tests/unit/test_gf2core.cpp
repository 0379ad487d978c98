#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gf2lights/errors.hpp"
#include "gf2lights/gf2.hpp"
#include "gf2lights/random.hpp"
#include "oracles.hpp"

using namespace gf2lights;

TEST_CASE("vector bits across word boundaries") {
  Gf2Vector v(130);
  CHECK(v.none());
  for (std::size_t i : {0u, 63u, 64u, 127u, 129u}) v.set(i);
  CHECK(v.count() == 5);
  CHECK(v.support() == std::vector<std::size_t>{0, 63, 64, 127, 129});
  CHECK(v.find_next(1) == 63);
  CHECK(v.find_next(128) == 129);
  CHECK(v.find_next(130) == 130);
  v.flip(63);
  CHECK_FALSE(v.get(63));
  CHECK_THROWS_AS(v.get(130), IndexOutOfRange);
  CHECK_THROWS_AS(v.set(200), IndexOutOfRange);
}

TEST_CASE("ones keeps the tail clear") {
  const Gf2Vector v = Gf2Vector::ones(70);
  CHECK(v.count() == 70);
  CHECK((v.words()[1] >> 6) == 0);
  CHECK(Gf2Vector::ones(0).size() == 0);
}

TEST_CASE("string round trip and parse errors") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Gf2Vector v = random_vector(rng, random_below(rng, 200));
    CHECK(Gf2Vector::from_string(v.to_string()) == v);
  }
  CHECK_THROWS_AS(Gf2Vector::from_string("01x"), ParseError);
  CHECK(Gf2Vector::from_string("").empty());
}

TEST_CASE("ordering matches the bit strings") {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const Gf2Vector a = random_vector(rng, random_below(rng, 140));
    Gf2Vector b = random_vector(rng, random_below(rng, 140));
    if (t % 3 == 0) b = a.prefix(std::min(a.size(), b.size()));
    const auto expected = a.to_string() <=> b.to_string();
    CHECK((a <=> b) == expected);
  }
}

TEST_CASE("slice, prefix and concat") {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Gf2Vector a = random_vector(rng, random_below(rng, 150));
    const Gf2Vector b = random_vector(rng, random_below(rng, 150));
    const Gf2Vector ab = a.concat(b);
    CHECK(ab.to_string() == a.to_string() + b.to_string());
    CHECK(ab.prefix(a.size()) == a);
    CHECK(ab.slice(a.size(), b.size()) == b);
  }
  CHECK_THROWS_AS(Gf2Vector(4).slice(2, 3), IndexOutOfRange);
}

TEST_CASE("xor, and, dot") {
  const auto a = Gf2Vector::from_string("1101");
  const auto b = Gf2Vector::from_string("0111");
  CHECK((a ^ b).to_string() == "1010");
  CHECK((a & b).to_string() == "0101");
  CHECK(dot(a, b) == false);
  CHECK_THROWS_AS(a ^ Gf2Vector(3), DimensionMismatch);
  CHECK_THROWS_AS(dot(a, Gf2Vector(5)), DimensionMismatch);
}

TEST_CASE("matrix construction and access") {
  const auto m = Gf2Matrix::from_strings({"101", "011"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 2));
  CHECK_FALSE(m.get(1, 0));
  CHECK(m.column(2).to_string() == "11");
  CHECK(m.transposed().to_strings() == std::vector<std::string>{"10", "01", "11"});
  CHECK(Gf2Matrix::identity(3).is_symmetric());
  CHECK_FALSE(m.is_symmetric());
  CHECK(m.submatrix(0, 1, 2, 2).to_strings() == std::vector<std::string>{"01", "11"});
  CHECK_THROWS_AS(Gf2Matrix::from_strings({"10", "1"}), ParseError);
  CHECK_THROWS_AS(m.get(2, 0), IndexOutOfRange);
  CHECK_THROWS_AS(m.submatrix(1, 1, 2, 2), IndexOutOfRange);
}

TEST_CASE("matvec and matmul agree with naive evaluation") {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + random_below(rng, 70), k = 1 + random_below(rng, 70), c = 1 + random_below(rng, 70);
    const Gf2Matrix a = random_matrix(rng, r, k);
    const Gf2Matrix b = random_matrix(rng, k, c);
    const Gf2Vector x = random_vector(rng, c);
    CHECK(matvec(b, x) == oracle::naive_matvec(b, x));
    CHECK(matvec(matmul(a, b), x) == matvec(a, matvec(b, x)));
    CHECK(matmul(a, b).transposed() == matmul(b.transposed(), a.transposed()));
  }
  CHECK_THROWS_AS(matvec(Gf2Matrix(2, 3), Gf2Vector(2)), DimensionMismatch);
  CHECK_THROWS_AS(matmul(Gf2Matrix(2, 3), Gf2Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("solve matches enumeration on random small systems") {
  Rng rng(15);
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 1 + random_below(rng, 7), c = 1 + random_below(rng, 8);
    const Gf2Matrix a = random_matrix(rng, r, c);
    const Gf2Vector b = random_vector(rng, r);
    const auto expected = oracle::brute_solutions(a, b);
    const AffineSolutionSet s = solve(a, b);
    REQUIRE(s.feasible == !expected.empty());
    if (s.feasible) {
      std::set<std::string> got;
      for (const auto& x : s.enumerate()) got.insert(x.to_string());
      CHECK(got == expected);
      CHECK(s.enumerate().size() == (std::size_t{1} << s.nullity()));
    } else {
      REQUIRE(s.witness);
      CHECK(matvec(a.transposed(), *s.witness).none());
      CHECK(dot(*s.witness, b));
    }
  }
}

TEST_CASE("free variables are zero in the particular solution") {
  // x1 + x2 = 1: pivot on x1, x2 free.
  const auto s = solve(Gf2Matrix::from_strings({"11"}), Gf2Vector::from_string("1"));
  CHECK(s.particular.to_string() == "10");
  CHECK(s.nullity() == 1);
}

TEST_CASE("rank plus nullity is the column count") {
  Rng rng(16);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + random_below(rng, 90), c = 1 + random_below(rng, 90);
    const Gf2Matrix a = random_matrix(rng, r, c);
    const auto kernel = nullspace(a);
    CHECK(rank(a) + kernel.size() == c);
    for (const auto& v : kernel) CHECK(matvec(a, v).none());
  }
  Rng small(17);
  for (int t = 0; t < 100; ++t) {
    const Gf2Matrix a = random_matrix(small, 1 + random_below(small, 6), 1 + random_below(small, 6));
    CHECK(rank(a) == oracle::brute_rank(a));
  }
}

TEST_CASE("reduced echelon form and transform") {
  Rng rng(18);
  for (int t = 0; t < 100; ++t) {
    const Gf2Matrix a = random_matrix(rng, 1 + random_below(rng, 40), 1 + random_below(rng, 40));
    const Echelon e = reduced_echelon(a);
    CHECK(matmul(e.transform, a) == e.reduced);
    CHECK(e.pivot_columns.size() == rank(a));
    CHECK(std::is_sorted(e.pivot_columns.begin(), e.pivot_columns.end()));
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      CHECK(e.reduced.column(e.pivot_columns[i]) == Gf2Vector::unit(a.rows(), i));
    }
    CHECK(rank(e.transform) == a.rows());
  }
}

TEST_CASE("solve_with_prefix pins the leading variables") {
  Rng rng(19);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + random_below(rng, 6), c = 1 + random_below(rng, 7);
    const Gf2Matrix a = random_matrix(rng, r, c);
    const Gf2Vector b = random_vector(rng, r);
    const Gf2Vector w = random_vector(rng, random_below(rng, c + 1));
    std::set<std::string> expected;
    for (const auto& x : oracle::brute_solutions(a, b)) {
      if (x.substr(0, w.size()) == w.to_string()) expected.insert(x);
    }
    const auto s = solve_with_prefix(a, b, w);
    REQUIRE(s.feasible == !expected.empty());
    if (s.feasible) {
      std::set<std::string> got;
      for (const auto& x : s.enumerate()) got.insert(x.to_string());
      CHECK(got == expected);
    }
  }
  CHECK_THROWS_AS(solve_with_prefix(Gf2Matrix(1, 2), Gf2Vector(1), Gf2Vector(3)), DimensionMismatch);
}

TEST_CASE("enumerate refuses large nullity") {
  const auto s = solve(Gf2Matrix(1, 30), Gf2Vector(1));
  CHECK(s.nullity() == 30);
  CHECK_THROWS_AS(s.enumerate(), std::length_error);
  CHECK_THROWS_AS(solve(Gf2Matrix(1, 3), Gf2Vector(1)).enumerate(2), std::length_error);
  CHECK(solve(Gf2Matrix(1, 3), Gf2Vector(1)).enumerate(3).size() == 8);
}

TEST_CASE("quadratic form equals the diagonal dot product for symmetric A") {
  Rng rng(20);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + random_below(rng, 80);
    const Gf2Matrix a = random_symmetric(rng, n);
    const Gf2Vector z = random_vector(rng, n);
    Gf2Vector d(n);
    for (std::size_t i = 0; i < n; ++i) d.set(i, a.get(i, i));
    CHECK(quadratic_form(a, z) == dot(d, z));
    CHECK(quadratic_form(a, z) == dot(z, matvec(a, z)));
  }
  CHECK_THROWS_AS(quadratic_form(Gf2Matrix(2, 3), Gf2Vector(3)), DimensionMismatch);
}

TEST_CASE("column_cut takes the top of a column") {
  const auto a = Gf2Matrix::from_strings({"10", "11", "01"});
  CHECK(column_cut(a, 1, 2).to_string() == "11");
  CHECK(column_cut(a, 2, 3).to_string() == "011");
  CHECK(column_cut(a, 2, 0).empty());
  CHECK_THROWS_AS(column_cut(a, 0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(column_cut(a, 3, 1), IndexOutOfRange);
  CHECK_THROWS_AS(column_cut(a, 1, 4), IndexOutOfRange);
}
