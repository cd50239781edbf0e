#include "doctest.h"

#include "fixtures.hpp"
#include "nll/bundle.hpp"
#include "nll/errors.hpp"
#include "oracles.hpp"

using namespace nll;

namespace {

DegreeData unstable11() { return DegreeData::make({1, 1, 1, 8}, {0, 0}); }

}  // namespace

TEST_CASE("Chern classes") {
  const ChernData c = chern(fixtures::ci(2, 2, 3));
  CHECK(c.c1 == -7);
  CHECK(c.c2 == 16);
  CHECK(c.twisted(3).c2 == 4);
  CHECK(c.twisted(3).c1 == -1);

  const ChernData n2 = chern(DegreeData::make({1, 1, 1, 2}, {0, 0}));
  CHECK(n2.c1 == -5);
  CHECK(n2.c2 == 9);
  CHECK(n2.twisted(2).c2 == 3);
}

TEST_CASE("Chern classes agree with the series expansion") {
  for (const auto& fx : fixtures::generic()) {
    CAPTURE(fx.name);
    const auto [c1, c2] = oracle::chern_series(fx.degrees);
    CHECK(chern(fx.degrees).c1 == c1);
    CHECK(chern(fx.degrees).c2 == c2);
  }
  const auto dd = DegreeData::make({2, 3, 3, 4}, {1, 2});
  const auto [c1, c2] = oracle::chern_series(dd);
  CHECK(chern(dd).c1 == c1);
  CHECK(chern(dd).c2 == c2);
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(fixtures::ci(2, 2, 3), 0) == 0);
  CHECK(euler_characteristic_from_line_bundles(fixtures::ci(2, 2, 3), 0) == 0);
  CHECK(euler_characteristic(DegreeData::make({1, 1, 1, 2}, {0, 0}), 0) == -2);
  CHECK(euler_characteristic_from_line_bundles(DegreeData::make({1, 1, 1, 2}, {0, 0}), 0) == -2);
  const auto dd = fixtures::ci(2, 2, 3);
  for (int t = -5; t <= 5; ++t)
    CHECK(euler_characteristic(dd, t) - euler_characteristic(dd, t - 1) == 2 * t + 2 - dd.d());
}

TEST_CASE("Euler characteristic agrees with Riemann-Roch") {
  for (const auto& fx : fixtures::generic())
    for (int t = -10; t <= 10; ++t) {
      const ChernData c = chern(fx.degrees).twisted(t);
      CHECK(2 * euler_characteristic(fx.degrees, t) == oracle::twice_riemann_roch(c.c1, c.c2));
    }
}

TEST_CASE("global sections") {
  // stable with c1 = -7: no sections up to t = 3
  CHECK(h0(fixtures::ci(2, 2, 3), 3) == 0);
  CHECK(h0(fixtures::ci(2, 2, 3), 4) == 1);
  // a = (1,1,1,8): h0(E(t)) = C(t - 1, 2)
  for (int t = 0; t <= 9; ++t) {
    const std::int64_t want = t - 1 < 2 ? 0 : (t - 1) * (t - 2) / 2;
    CHECK(h0(unstable11(), t) == want);
  }
}

TEST_CASE("global sections match kernels of phi_t") {
  for (const auto& fx : fixtures::generic()) {
    CAPTURE(fx.name);
    const auto m = fixtures::draw(fx.degrees);
    for (int t = 0; t <= fx.degrees.d() + 1; ++t)
      CHECK(h0(fx.degrees, t) == static_cast<std::int64_t>(oracle::kernel_dim(m.presentation(), t)));
  }
}

TEST_CASE("stability classification") {
  const auto s = classify_stability(fixtures::ci(2, 2, 3));
  CHECK(s.cls == StabilityClass::Stable);
  CHECK(s.normalized_twist == 3);
  CHECK(s.c1_normalized == -1);
  CHECK_FALSE(s.instability_index.has_value());
  CHECK(s.generic_splitting() == SplittingType{0, -1});

  const auto u = classify_stability(unstable11());
  CHECK(u.cls == StabilityClass::Unstable);
  CHECK(u.instability_index == std::optional<int>(2));
  CHECK(u.generic_splitting() == SplittingType{2, -3});

  const auto even = classify_stability(fixtures::ci(2, 2, 2));
  CHECK(even.semistable());
  CHECK(even.c1_normalized == 0);
  CHECK(even.generic_splitting() == SplittingType{0, 0});

  // b = 0, d odd: k = a_{n+2} - (d + 1) / 2
  for (int top = 4; top <= 10; ++top) {
    const auto dd = DegreeData::make({1, 1, 1, top}, {0, 0});
    if (dd.d() % 2 == 0) continue;
    CHECK(classify_stability(dd).instability_index == std::optional<int>(top - (dd.d() + 1) / 2));
  }
  CHECK(to_string(StabilityClass::StrictlySemistable) == "semistable");
}

TEST_CASE("case table") {
  const auto semi = classify_stability(fixtures::ci(2, 2, 2));
  CHECK(lefschetz_oracle(semi, {0, 0}));
  CHECK_FALSE(lefschetz_oracle(semi, {1, -1}));

  StabilityReport unstable_even{StabilityClass::Unstable, 12, 6, 0, 2};
  CHECK_FALSE(lefschetz_oracle(unstable_even, {3, -3}));
  CHECK(lefschetz_oracle(unstable_even, {2, -2}));

  StabilityReport unstable_odd{StabilityClass::Unstable, 11, 5, -1, 0};
  CHECK(lefschetz_oracle(unstable_odd, {0, -1}));

  CHECK_THROWS_AS(lefschetz_oracle(semi, {0, -1}), InconsistentData);
}

TEST_CASE("multiplication rank predicted from the splitting type") {
  // generic line on (2,2,3): E|ell = O(-3) + O(-4), ranks min(h_{t-1}, h_t)
  const auto dd = fixtures::ci(2, 2, 3);
  const std::vector<std::int64_t> h{0, 1, 3, 4, 3, 1, 0};
  for (int t = 0; t <= 5; ++t)
    CHECK(predicted_multiplication_rank(dd, {-3, -4}, t) == std::min(h[static_cast<std::size_t>(t)],
                                                                     h[static_cast<std::size_t>(t + 1)]));
}
