#include "nll/bundle.hpp"

#include <algorithm>
#include <string>

#include "nll/errors.hpp"
#include "nll/polynomial.hpp"

namespace nll {
namespace {

std::int64_t chi_line(std::int64_t m) { return (m + 2) * (m + 1) / 2; }
std::int64_t h0_line(std::int64_t m) { return static_cast<std::int64_t>(graded_dim(static_cast<int>(m))); }
std::int64_t h0_p1(std::int64_t m) { return std::max<std::int64_t>(m + 1, 0); }

}  // namespace

ChernData chern(const DegreeData& dd) {
  std::int64_t e1a = 0, e2a = 0, e1b = 0, e2b = 0;
  for (int x : dd.a) {
    e2a += e1a * x;
    e1a += x;
  }
  for (int x : dd.b) {
    e2b += e1b * x;
    e1b += x;
  }
  // c(E) = prod(1 - a h) / prod(1 - b h)
  //      = (1 - e1a h + e2a h^2)(1 + e1b h + (e1b^2 - e2b) h^2)
  return {static_cast<int>(e1b - e1a), e2a - e1a * e1b + e1b * e1b - e2b, dd.d()};
}

std::int64_t euler_characteristic(const DegreeData& dd, int t) {
  std::int64_t squares = 0;
  for (int x : dd.a) squares += static_cast<std::int64_t>(x) * x;
  for (int x : dd.b) squares -= static_cast<std::int64_t>(x) * x;
  const std::int64_t d = dd.d();
  const std::int64_t tt = t;
  const std::int64_t twice = 2 * tt * tt + 6 * tt + 4 - 2 * d * tt - 3 * d + squares;
  if (twice % 2 != 0) throw InconsistentData("odd Euler characteristic numerator");
  return twice / 2;
}

std::int64_t euler_characteristic_from_line_bundles(const DegreeData& dd, int t) {
  std::int64_t chi = 0;
  for (int x : dd.a) chi += chi_line(t - x);
  for (int x : dd.b) chi -= chi_line(t - x);
  return chi;
}

std::int64_t h0(const DegreeData& dd, int t) {
  const int d = dd.d();
  std::int64_t v = 0;
  for (int x : dd.a) v += h0_line(t - d + x);
  for (int x : dd.b) v -= h0_line(t - d + x);
  if (v < 0) throw InconsistentData("negative h0(E(" + std::to_string(t) + "))");
  return v;
}

std::int64_t h2(const DegreeData& dd, int t) { return h0(dd, dd.d() - 3 - t); }

std::string_view to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "stable";
    case StabilityClass::StrictlySemistable: return "semistable";
    case StabilityClass::Unstable: return "unstable";
  }
  return "";
}

SplittingType StabilityReport::generic_splitting() const {
  const int k = instability_index.value_or(0);
  return {k, -k + c1_normalized};
}

StabilityReport classify_stability(const DegreeData& dd) {
  StabilityReport s;
  s.d = dd.d();
  s.normalized_twist = s.d % 2 == 0 ? s.d / 2 : (s.d - 1) / 2;
  s.c1_normalized = -s.d + 2 * s.normalized_twist;

  const auto h0n = [&](int t) { return h0(dd, s.normalized_twist + t); };
  if (h0n(0) == 0) {
    s.cls = StabilityClass::Stable;
  } else if (s.c1_normalized == 0 && h0n(-1) == 0) {
    s.cls = StabilityClass::StrictlySemistable;
  } else {
    s.cls = StabilityClass::Unstable;
    int t = 0;
    while (h0n(t - 1) > 0) --t;
    s.instability_index = -t;
  }
  return s;
}

bool lefschetz_oracle(const StabilityReport& s, const SplittingType& split) {
  if (split.alpha + split.beta != s.c1_normalized)
    throw InconsistentData("splitting type (" + std::to_string(split.alpha) + ", " +
                           std::to_string(split.beta) + ") does not sum to c1 = " +
                           std::to_string(s.c1_normalized));
  if (split.alpha < split.beta) throw InvalidInput("splitting type must satisfy alpha >= beta");
  if (s.semistable()) return split.alpha - split.beta <= 1;
  const int k = *s.instability_index;
  if (s.c1_normalized == 0) return split == SplittingType{k, -k};
  return split == SplittingType{k, -k - 1};
}

std::int64_t predicted_multiplication_rank(const DegreeData& dd, const SplittingType& split, int t) {
  // ker(x ell : M_{t-1} -> M_t) = h0(E(t)|ell) - h0(E(t)) + h0(E(t-1))
  const std::int64_t restricted = h0_p1(t + split.alpha) + h0_p1(t + split.beta);
  const std::int64_t kernel = restricted - h0(dd, t) + h0(dd, t - 1);
  // source M_{t-1} has dimension h^1(E(t-1)) = h0 - chi + h2
  const std::int64_t source = h0(dd, t - 1) - euler_characteristic(dd, t - 1) + h2(dd, t - 1);
  return source - kernel;
}

}  // namespace nll
