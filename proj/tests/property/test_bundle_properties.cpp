#include "doctest.h"

#include "fixtures.hpp"
#include "nll/bundle.hpp"
#include "nll/predictor.hpp"
#include "oracles.hpp"

using namespace nll;

namespace {

std::vector<DegreeData> sequences() {
  std::vector<DegreeData> out;
  for (int x = 1; x <= 4; ++x)
    for (int y = x; y <= 4; ++y)
      for (int z = y; z <= 5; ++z) out.push_back(fixtures::ci(x, y, z));
  for (int top = 1; top <= 9; ++top) out.push_back(DegreeData::make({1, 1, 1, top}, {0, 0}));
  out.push_back(DegreeData::make({2, 2, 2, 3}, {0, 1}));
  out.push_back(DegreeData::make({2, 2, 3, 3}, {1, 1}));
  out.push_back(DegreeData::make({2, 3, 3, 4}, {0, 2}));
  out.push_back(DegreeData::make({1, 1, 2, 2, 2}, {0, 0, 0}));
  return out;
}

}  // namespace

TEST_CASE("closed-form chi equals the line-bundle sum") {
  for (const auto& dd : sequences())
    for (int t = -10; t <= 10; ++t) CHECK(euler_characteristic(dd, t) == euler_characteristic_from_line_bundles(dd, t));
}

TEST_CASE("chi = h0 - h1 + h2 with h1 read off the module") {
  for (const auto& fx : fixtures::generic()) {
    CAPTURE(fx.name);
    const auto m = fixtures::draw(fx.degrees);
    for (int t = -10; t <= 10; ++t) {
      const auto h1 = static_cast<std::int64_t>(m.h(t));
      CHECK(euler_characteristic(fx.degrees, t) == h0(fx.degrees, t) - h1 + h2(fx.degrees, t));
    }
  }
}

TEST_CASE("c2 shift rule") {
  for (const auto& dd : sequences()) {
    const ChernData c = chern(dd);
    for (int t = -10; t <= 10; ++t) {
      CHECK(c.twisted(t).c2 == c.c2 + static_cast<std::int64_t>(c.c1) * t + static_cast<std::int64_t>(t) * t);
      // twisting the sequence by t shifts every degree by -t
      std::vector<int> a = dd.a, b = dd.b;
      for (int& v : a) v -= t;
      for (int& v : b) v -= t;
      DegreeData moved{a, b};
      const auto [c1, c2] = oracle::chern_series(moved);
      CHECK(c.twisted(t).c1 == c1);
      CHECK(c.twisted(t).c2 == c2);
    }
  }
}

TEST_CASE("h0 is non-decreasing") {
  for (const auto& dd : sequences())
    for (int t = -10; t < 3 * dd.d(); ++t) CHECK(h0(dd, t) <= h0(dd, t + 1));
}

TEST_CASE("the case table covers every splitting type") {
  for (const auto& dd : sequences()) {
    const auto s = classify_stability(dd);
    for (int alpha = -12; alpha <= 12; ++alpha) {
      const int beta = s.c1_normalized - alpha;
      if (alpha < beta) continue;
      CHECK_NOTHROW(lefschetz_oracle(s, {alpha, beta}));
    }
    CHECK(lefschetz_oracle(s, s.generic_splitting()));
  }
}

TEST_CASE("instability index, b = 0 and d odd") {
  for (const auto& dd : sequences()) {
    if (!dd.b_all_zero() || dd.d() % 2 == 0) continue;
    const auto s = classify_stability(dd);
    const int top = dd.a.back();
    const int rest = std::accumulate(dd.a.begin(), dd.a.end() - 1, 0) - std::accumulate(dd.b.begin(), dd.b.end(), 0);
    CHECK(s.semistable() == (top < rest));
    if (!s.semistable()) CHECK(s.instability_index == std::optional<int>(top - (dd.d() + 1) / 2));
  }
}

TEST_CASE("degree identity on odd stable fixtures") {
  for (const auto& fx : fixtures::generic()) {
    const auto s = classify_stability(fx.degrees);
    if (fx.degrees.d() % 2 == 0 || !s.semistable()) continue;
    CAPTURE(fx.name);
    const auto m = fixtures::draw(fx.degrees);
    const int i = fx.degrees.middle_degree();
    const auto lhs = binomial(static_cast<std::int64_t>(m.h(i + 1)), static_cast<std::int64_t>(m.h(i)) - 1);
    const auto rhs = binomial(chern(fx.degrees).twisted(s.normalized_twist).c2, 2);
    CHECK(lhs == rhs);
  }
}
