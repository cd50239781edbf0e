#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "nll/groebner.hpp"
#include "nll/jumping.hpp"
#include "nll/lefschetz.hpp"
#include "nll/predictor.hpp"
#include "oracles.hpp"

using namespace nll;

namespace {

const PrimeField F;

std::vector<DegreeData> grid() {
  std::vector<DegreeData> out;
  for (int x = 2; x <= 4; ++x)
    for (int y = x; y <= 4; ++y)
      for (int z = y; z <= 4; ++z) out.push_back(fixtures::ci(x, y, z));
  out.push_back(DegreeData::make({1, 1, 1, 2}, {0, 0}));
  out.push_back(DegreeData::make({1, 2, 2, 2}, {0, 0}));
  out.push_back(DegreeData::make({2, 2, 2, 3}, {0, 1}));
  out.push_back(DegreeData::make({2, 2, 3, 3}, {1, 1}));
  out.push_back(DegreeData::make({1, 1, 1, 8}, {0, 0}));
  return out;
}

std::string name(const DegreeData& dd) {
  std::string s = "a=";
  for (int v : dd.a) s += std::to_string(v) + ",";
  s += " b=";
  for (int v : dd.b) s += std::to_string(v) + ",";
  return s;
}

std::array<Fp, 3> draw_line(std::mt19937_64& rng) {
  std::array<Fp, 3> c;
  do {
    c = {F.random(rng), F.random(rng), F.random(rng)};
  } while (c[0].is_zero() && c[1].is_zero() && c[2].is_zero());
  return c;
}

}  // namespace

TEST_CASE("Hilbert function: finite length, unimodal, forced by the resolution") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 11);
    const auto h = hilbert_vector(m);
    CHECK(is_unimodal(h));
    const auto series = oracle::buchsbaum_rim_series(dd, 64);
    for (int t = dd.b.front(); t <= dd.socle_degree() + 3; ++t)
      CHECK(m.h(t) == static_cast<std::size_t>(series[static_cast<std::size_t>(t)]));
    for (int t = dd.socle_degree() + 1; t <= dd.socle_degree() + 3; ++t) CHECK(oracle::hilbert(m.presentation(), t) == 0);
    if (dd.b_all_zero())
      for (int t = 0; t <= dd.d() - 3; ++t) CHECK(m.h(t) == m.h(dd.d() - 3 - t));
  }
}

TEST_CASE("socle sits in degrees d - b_j - 3") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    std::vector<int> want;
    for (int bj : dd.b) want.push_back(dd.d() - bj - 3);
    std::sort(want.begin(), want.end());
    CHECK(socle(fixtures::draw(dd, 4)) == want);
  }
}

TEST_CASE("multiplication ranks agree with the independent construction") {
  std::mt19937_64 rng(404);
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 2);
    for (int trial = 0; trial < 3; ++trial) {
      const auto ell = draw_line(rng);
      for (int t = m.min_degree(); t < m.max_degree(); ++t)
        CHECK(rank(m.multiplication_map(ell, t)) ==
              oracle::multiplication_rank(m.presentation(), {ell[0].value, ell[1].value, ell[2].value}, t));
    }
  }
}

TEST_CASE("some random line is Lefschetz") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 6);
    std::mt19937_64 rng(6);
    int found = 0;
    for (int k = 0; k < 100; ++k) found += is_lefschetz(m, draw_line(rng)).lefschetz;
    CHECK(found > 0);
  }
}

TEST_CASE("specialization: minors vanish exactly where the rank drops") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 3);
    const int i = dd.middle_degree();
    const auto I = locus_ideal_at(m, i);
    const auto gb = buchberger(I.generators, F, Ring::Dual);
    const std::size_t want = std::min(m.h(i), m.h(i + 1));

    std::vector<std::array<Fp, 3>> lines;
    std::mt19937_64 rng(100);
    for (int k = 0; k < 100; ++k) lines.push_back(draw_line(rng));
    for (const auto& p : sample_locus_points(gb, measure(gb), 20, 5).points) lines.push_back(p);

    int special = 0;
    for (const auto& ell : lines) {
      bool all_zero = true;
      for (const auto& g : I.generators) all_zero = all_zero && g.evaluate(ell).is_zero();
      const bool drops = rank(m.multiplication_map(ell, i)) < want;
      CHECK(all_zero == drops);
      special += drops;
    }
    MESSAGE(name(dd) << ": " << special << " rank drops among " << lines.size() << " lines");
  }
}

TEST_CASE("the middle degree carries the whole locus") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 9);
    const Locus L = locus_ideal(m);
    const auto mid = saturate(L.middle_basis), all = saturate(L.intersection);
    CHECK(same_ideal(mid, all));
    CHECK(measure(mid).dimension == measure(all).dimension);
    CHECK(measure(mid).degree == measure(all).degree);
  }
}

TEST_CASE("self-duality for b = 0 and d odd") {
  // M is self-dual up to twist, so B_i and B_{d-4-i} are transposes up to
  // change of basis.
  for (const auto& dd : grid()) {
    if (!dd.b_all_zero() || dd.d() % 2 == 0) continue;
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 12);
    const int i = dd.middle_degree();
    const auto x = buchberger(locus_ideal_at(m, i).generators, F, Ring::Dual);
    const auto y = buchberger(locus_ideal_at(m, dd.d() - 4 - i).generators, F, Ring::Dual);
    CHECK(dd.d() - 4 - i == i + 1);
    CHECK(same_ideal(saturate(x), saturate(y)));
  }
}

TEST_CASE("Groebner bases of minors ideals satisfy the Buchberger criterion") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 1);
    const auto I = locus_ideal_at(m, dd.middle_degree());
    const auto d = buchberger(I.generators, F, Ring::Dual);
    const auto l = buchberger(I.generators, F, Ring::Dual, MonomialOrder::Lex);
    CHECK(is_groebner_basis(d.basis, MonomialOrder::DegLex));
    CHECK(is_groebner_basis(l.basis, MonomialOrder::Lex));
    CHECK(measure(d).dimension == measure(l).dimension);
    CHECK(measure(d).degree == measure(l).degree);
    for (const auto& f : I.generators) CHECK(contains(d, f));
  }
}

TEST_CASE("zero-dimensional loci are reduced point sets") {
  for (const auto& dd : grid()) {
    const auto s = classify_stability(dd);
    if (dd.d() % 2 == 0 || !s.semistable()) continue;
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 2);
    const auto gb = buchberger(locus_ideal_at(m, dd.middle_degree()).generators, F, Ring::Dual);
    const auto measured = measure(gb);
    REQUIRE(measured.dimension == 0);
    CHECK(solve_zero_dimensional(saturate(gb), 77).distinct_points == measured.degree);
  }
}

TEST_CASE("expected codimension from the Hilbert function") {
  for (const auto& dd : grid()) {
    CAPTURE(name(dd));
    const auto m = fixtures::draw(dd, 1);
    const auto s = classify_stability(dd);
    if (dd.d() % 2 == 0 || !s.semistable()) CHECK(expected_codimension(m) == 1);
    if (dd.d() % 2 == 1 && s.semistable() && dd.b_all_zero()) CHECK(expected_codimension(m) == 2);
  }
}
