#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "nll/errors.hpp"
#include "nll/field.hpp"
#include "nll/matrix.hpp"
#include "oracles.hpp"

using namespace nll;

namespace {

oracle::Table lift(const Matrix& m) {
  oracle::Table t(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[r][c] = m(r, c).value;
  return t;
}

}  // namespace

TEST_CASE("field arithmetic") {
  const PrimeField F;
  CHECK(F.prime() == 65521);
  CHECK(F.from_int(-1).value == 65520);
  CHECK(F.to_signed(F.from_int(-5)) == -5);
  CHECK(F.mul(F.from_int(2), F.inv(F.from_int(2))).value == 1);
  CHECK(F.pow(F.from_int(3), 65520).value == 1);
  CHECK(F.add(F.from_int(65520), F.from_int(2)).value == 1);
  CHECK(F.sub(Fp{0}, Fp{1}).value == 65520);
  CHECK_THROWS_AS(F.inv(Fp{0}), InvalidInput);
  CHECK_THROWS_AS(PrimeField(65522), InvalidInput);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
}

TEST_CASE("every nonzero residue mod 101 has an inverse") {
  const PrimeField F(101);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(F.mul(Fp{a}, F.inv(Fp{a})).value == 1);
}

TEST_CASE("rank of identity and zero") {
  const PrimeField F;
  CHECK(rank(Matrix::identity(F, 3)) == 3);
  CHECK(rank(Matrix(F, 2, 5)) == 0);
  CHECK(rank(Matrix(F, 0, 4)) == 0);
}

TEST_CASE("seeded 4x6 rank agrees with the rational oracle") {
  const PrimeField F;
  std::mt19937_64 rng(42);
  const Matrix m = Matrix::random(F, 4, 6, rng);
  CHECK(rank(m) == oracle::rank_rational(lift(m)));
  CHECK(rank(m) == rational_rank(integer_lift(m)));
  CHECK(rank(m) == 4);
}

TEST_CASE("rank of a matrix with a forced dependency") {
  const PrimeField F;
  const Matrix m = Matrix::from_rows(F, {{1, 2, 3}, {2, 4, 6}, {0, 1, -1}});
  CHECK(rank(m) == 2);
  CHECK(rational_rank({{1, 2, 3}, {2, 4, 6}, {0, 1, -1}}) == 2);
}

TEST_CASE("modular rank can drop below the rational rank") {
  // det = 7 vanishes mod 7 only
  const std::vector<std::vector<std::int64_t>> rows{{1, 2}, {3, 13}};
  CHECK(rational_rank(rows) == 2);
  CHECK(rank(Matrix::from_rows(PrimeField(7), rows)) == 1);
  CHECK(rank(Matrix::from_rows(PrimeField(11), rows)) == 2);
}

TEST_CASE("kernel basis") {
  const PrimeField F;
  CHECK(kernel_basis(Matrix::identity(F, 3)).empty());
  const auto two = kernel_basis(Matrix(F, 1, 2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Vector{Fp{1}, Fp{0}});
  CHECK(two[1] == Vector{Fp{0}, Fp{1}});

  const Matrix m = Matrix::from_rows(F, {{1, 1, 0, 2}, {0, 1, 1, 1}});
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(m.apply(v) == Vector(2, Fp{0}));
}

TEST_CASE("kernel of phi_5 for (2,2,2,3)/(0,1) is one-dimensional") {
  const auto m = fixtures::draw(DegreeData::make({2, 2, 2, 3}, {0, 1}));
  const Matrix phi5 = graded_piece_matrix(m.presentation(), 5);
  const auto ker = kernel_basis(phi5);
  CHECK(ker.size() == 1);
  CHECK(oracle::kernel_dim(m.presentation(), 5) == 1);
  for (const auto& v : ker) CHECK(phi5.apply(v) == Vector(phi5.rows(), Fp{0}));
}

TEST_CASE("cokernel basis") {
  const PrimeField F;
  const CokernelBasis zero(Matrix(F, 3, 2));
  CHECK(zero.basis() == std::vector<std::size_t>{0, 1, 2});
  CHECK(zero.rank() == 0);

  const CokernelBasis onto(Matrix::from_rows(F, {{1, 0, 2}, {0, 1, 5}}));
  CHECK(onto.dim() == 0);

  // image spanned by e0 + e2: the leftmost pivot is 0
  const CokernelBasis c(Matrix::from_rows(F, {{1}, {0}, {1}}));
  CHECK(c.pivots() == std::vector<std::size_t>{0});
  CHECK(c.basis() == std::vector<std::size_t>{1, 2});
  // e0 = -e2 mod the image
  CHECK(c.reduce(Vector{Fp{1}, Fp{0}, Fp{0}}) == Vector{Fp{0}, F.from_int(-1)});
}

TEST_CASE("cokernel of phi_2 for (2,2,3)/(0) has four classes") {
  const auto m = fixtures::draw(fixtures::ci(2, 2, 3));
  const CokernelBasis c(graded_piece_matrix(m.presentation(), 2));
  CHECK(c.dim() == 4);
  CHECK(c.target_dim() == 6);
}

TEST_CASE("matrix product and transpose") {
  const PrimeField F;
  const Matrix a = Matrix::from_rows(F, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows(F, {{0, 1}, {1, 0}});
  CHECK(a * b == Matrix::from_rows(F, {{2, 1}, {4, 3}}));
  CHECK(a.transpose() == Matrix::from_rows(F, {{1, 3}, {2, 4}}));
  CHECK(a + a == Matrix::from_rows(F, {{2, 4}, {6, 8}}));
  const Matrix blocks[] = {a, b};
  CHECK(stack_rows(blocks).rows() == 4);
}
