#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "nll/errors.hpp"
#include "nll/jumping.hpp"
#include "nll/lefschetz.hpp"

using namespace nll;

namespace {

const PrimeField F;

std::vector<std::array<Fp, 3>> locus_points(const GradedModule& m, std::size_t wanted, std::uint64_t seed) {
  const auto I = locus_ideal_at(m, m.degrees().middle_degree());
  const auto gb = buchberger(I.generators, F, Ring::Dual);
  return sample_locus_points(gb, measure(gb), wanted, seed).points;
}

}  // namespace

TEST_CASE("line parametrization spans the line") {
  const LinePoint line(F, {F.from_int(2), F.from_int(-3), F.from_int(5)});
  const Matrix& param = line.parametrization();
  CHECK(rank(param) == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    Fp dot{};
    for (std::size_t r = 0; r < 3; ++r) dot = F.mul_add(dot, line.coords()[r], param(r, c));
    CHECK(dot.is_zero());
  }
  CHECK_THROWS_AS(LinePoint(F, {Fp{0}, Fp{0}, Fp{0}}), DegenerateLine);
}

TEST_CASE("monomial (3,4,4) restricted to x3 = 0") {
  const auto rb = restrict(fixtures::monomial_344(), LinePoint(F, {Fp{0}, Fp{0}, Fp{1}}));
  CHECK(rb.entry(0, 0) == BinaryForm(F, {Fp{1}, Fp{0}, Fp{0}, Fp{0}}));
  CHECK(rb.entry(0, 1) == BinaryForm(F, {Fp{0}, Fp{0}, Fp{0}, Fp{0}, Fp{1}}));
  CHECK(rb.entry(0, 2).is_zero());
  CHECK(rb.entry(0, 2).degree() == 4);
}

TEST_CASE("restricted entries must have the twisted degree") {
  std::vector<std::vector<BinaryForm>> row{{BinaryForm(F, 2), BinaryForm(F, 2), BinaryForm(F, 2)}};
  CHECK_THROWS_AS(RestrictedBundle(fixtures::ci(2, 2, 3), row), InvalidInput);
}

TEST_CASE("generic splitting on (2,2,3) is (-3,-4)") {
  const auto m = fixtures::draw(fixtures::ci(2, 2, 3));
  const SplittingType g = generic_splitting_type(m.presentation(), 5);
  CHECK(g == SplittingType{-3, -4});
  CHECK(g.twisted(3) == classify_stability(m.degrees()).generic_splitting());
  std::mt19937_64 rng(8);
  const LinePoint line(F, random_line(F, rng));
  CHECK_FALSE(is_jumping(m.presentation(), line));
}

TEST_CASE("generic splitting on the unstable (1,1,1,8)/(0,0)") {
  const auto m = fixtures::draw(DegreeData::make({1, 1, 1, 8}, {0, 0}));
  const auto s = classify_stability(m.degrees());
  CHECK(generic_splitting_type(m.presentation(), 1).twisted(s.normalized_twist) == s.generic_splitting());
}

TEST_CASE("points of the (2,2,3) locus are jumping lines") {
  const auto m = fixtures::draw(fixtures::ci(2, 2, 3), 7);
  const auto generic = generic_splitting_type(m.presentation(), 1);
  const auto points = locus_points(m, 6, 2);
  for (const auto& ell : points) {
    const LinePoint line(F, ell);
    const SplittingType s = splitting_type(restrict(m.presentation(), line));
    CHECK(s.alpha + s.beta == -m.degrees().d());
    CHECK(s.alpha - s.beta > generic.alpha - generic.beta);
    CHECK(is_jumping(m.presentation(), line, generic));
    CHECK_FALSE(is_lefschetz(m, ell).lefschetz);
  }
}

TEST_CASE("points of the monomial (3,4,4) locus are jumping lines") {
  const GradedModule m(fixtures::monomial_344());
  const auto points = locus_points(m, 5, 3);
  REQUIRE_FALSE(points.empty());
  const auto generic = generic_splitting_type(m.presentation(), 1);
  for (const auto& ell : points) {
    CHECK(is_jumping(m.presentation(), LinePoint(F, ell), generic));
    CHECK_FALSE(is_lefschetz(m, ell).lefschetz);
  }
  // the coordinate line x1 lies on the locus
  CHECK(is_jumping(m.presentation(), LinePoint(F, {Fp{1}, Fp{0}, Fp{0}}), generic));
}

TEST_CASE("splitting types sum to c1 on random lines") {
  for (const auto& fx : fixtures::generic()) {
    CAPTURE(fx.name);
    const auto m = fixtures::draw(fx.degrees);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 10; ++k) {
      const auto s = splitting_type(restrict(m.presentation(), LinePoint(F, random_line(F, rng))));
      CHECK(s.alpha + s.beta == -fx.degrees.d());
      CHECK(s.alpha >= s.beta);
    }
  }
}
