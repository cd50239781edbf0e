#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nll/presentation.hpp"

namespace nll {

// Numerical invariants of the rank-2 bundle E in
//   0 -> E -> sum O(-a_i) -> sum O(-b_j) -> 0  on P^2.

struct ChernData {
  int c1 = 0;
  std::int64_t c2 = 0;
  int d = 0;

  // Chern classes of E(t).
  ChernData twisted(int t) const {
    return {c1 + 2 * t, c2 + static_cast<std::int64_t>(c1) * t + static_cast<std::int64_t>(t) * t, d};
  }
};

// c(E) * prod(1 - b_j h) = prod(1 - a_i h) mod h^3.
ChernData chern(const DegreeData& degrees);

// Closed form t^2 + 3t + 2 - dt - 3d/2 + (sum a^2 - sum b^2)/2.
std::int64_t euler_characteristic(const DegreeData& degrees, int t);
// sum chi(O(t - a_i)) - sum chi(O(t - b_j)).
std::int64_t euler_characteristic_from_line_bundles(const DegreeData& degrees, int t);

// From the dual sequence 0 -> sum O(b_j - d) -> sum O(a_i - d) -> E -> 0.
// Throws InconsistentData if the count comes out negative.
std::int64_t h0(const DegreeData& degrees, int t);
// Serre duality with E^dual = E(d): h^2(E(t)) = h^0(E(d - 3 - t)).
std::int64_t h2(const DegreeData& degrees, int t);

enum class StabilityClass { Stable, StrictlySemistable, Unstable };
std::string_view to_string(StabilityClass c);

struct SplittingType {
  int alpha = 0;  // alpha >= beta
  int beta = 0;

  SplittingType twisted(int t) const { return {alpha + t, beta + t}; }
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct StabilityReport {
  StabilityClass cls = StabilityClass::Stable;
  int d = 0;
  // E_norm = E(normalized_twist) has c1 in {0, -1}.
  int normalized_twist = 0;
  int c1_normalized = 0;
  // -min{t : h^0(E_norm(t)) > 0}; present iff unstable.
  std::optional<int> instability_index;

  bool semistable() const { return cls != StabilityClass::Unstable; }
  // Splitting type of E_norm on a general line.
  SplittingType generic_splitting() const;
};

StabilityReport classify_stability(const DegreeData& degrees);

// Whether a line with splitting type `normalized` (of E_norm) is a weak
// Lefschetz element. Throws InconsistentData if alpha + beta != c1(E_norm).
bool lefschetz_oracle(const StabilityReport& stability, const SplittingType& normalized);

// Rank of x ell : M_{t-1} -> M_t predicted from the splitting type of E on
// ell (not normalized), via the cohomology sequence of
//   0 -> E(t-1) -> E(t) -> E(t)|ell -> 0.
std::int64_t predicted_multiplication_rank(const DegreeData& degrees, const SplittingType& split,
                                           int t);

}  // namespace nll
