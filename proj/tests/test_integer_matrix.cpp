#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "cmrt/error.hpp"
#include "cmrt/integer_matrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cmrt;

namespace {

oracle::Grid random_grid(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long> entry(-9, 9);
  const int rows = dim(rng);
  const int cols = dim(rng);
  oracle::Grid g(rows, std::vector<long>(cols));
  for (auto& row : g) {
    for (auto& x : row) x = entry(rng);
  }
  return g;
}

IntegerMatrix diag(const std::vector<Integer>& d, int rows, int cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

}  // namespace

TEST_CASE("small Smith forms") {
  auto snf = smith_normal_form(IntegerMatrix::from_rows(std::vector<std::vector<long>>{{2, 0}, {0, 3}}));
  CHECK(snf.divisors == std::vector<Integer>{1, 6});
  CHECK(snf.rank == 2);
  CHECK(snf.torsion_order == 6);

  // I + P for the 4-cycle.
  IntegerMatrix ip = IntegerMatrix::identity(4);
  for (int i = 0; i < 4; ++i) ip((i + 1) % 4, i) += 1;
  snf = smith_normal_form(ip);
  CHECK(snf.divisors == std::vector<Integer>{1, 1, 1, 0});
  CHECK(snf.rank == 3);
  CHECK(snf.torsion_order == 1);

  snf = smith_normal_form(IntegerMatrix(3, 3));
  CHECK(snf.divisors == std::vector<Integer>{0, 0, 0});
  CHECK(snf.rank == 0);
  CHECK(snf.torsion_order == 1);
}

TEST_CASE("Smith decomposition reconstructs the diagonal form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto grid = random_grid(rng);
    const IntegerMatrix m = IntegerMatrix::from_rows(grid);
    const auto dec = smith_decomposition(m);
    CHECK(dec.left * m * dec.right == diag(dec.result.divisors, m.rows(), m.cols()));
    CHECK(abs(determinant(dec.left)) == 1);
    CHECK(abs(determinant(dec.right)) == 1);
  }
}

TEST_CASE("Smith divisors agree with gcds of minors") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto grid = random_grid(rng);
    const auto snf = smith_normal_form(IntegerMatrix::from_rows(grid));
    const auto minors = oracle::minor_gcds(grid);
    Integer prefix = 1;
    for (std::size_t k = 0; k < minors.size(); ++k) {
      prefix *= snf.divisors[k];
      CHECK(prefix == minors[k]);
      if (k + 1 < snf.divisors.size() && snf.divisors[k] != 0) {
        CHECK(mpz_divisible_p(snf.divisors[k + 1].get_mpz_t(), snf.divisors[k].get_mpz_t()));
      }
      CHECK(snf.divisors[k] >= 0);
    }
    CHECK(snf.rank == oracle::rational_rank(grid));
  }
}

TEST_CASE("rank and determinant") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto grid = random_grid(rng);
    const IntegerMatrix m = IntegerMatrix::from_rows(grid);
    CHECK(matrix_rank(m) == oracle::rational_rank(grid));
    if (m.rows() == m.cols()) {
      std::vector<int> idx(m.rows());
      std::iota(idx.begin(), idx.end(), 0);
      CHECK(determinant(m) == oracle::minor_det(grid, idx, idx));
    }
  }
  CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), InputError);
}

TEST_CASE("matrix text input") {
  std::stringstream ok("2 3\n1 2 3\n-4 5 6\n");
  const IntegerMatrix m = read_matrix(ok);
  CHECK(m.rows() == 2);
  CHECK(m(1, 0) == -4);
  std::stringstream short_input("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(read_matrix(short_input), InputError);
  std::stringstream junk("2 2\n1 x\n3 4\n");
  CHECK_THROWS_AS(read_matrix(junk), InputError);
  std::stringstream empty("");
  CHECK_THROWS_AS(read_matrix(empty), InputError);
}

TEST_CASE("number parsing") {
  CHECK(parse_integer("-123456789012345678901234567890") ==
        Integer("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer("12a"), InputError);
  CHECK_THROWS_AS(parse_integer(""), InputError);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}
