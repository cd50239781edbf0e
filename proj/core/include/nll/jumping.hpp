#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nll/binary_form.hpp"
#include "nll/bundle.hpp"
#include "nll/groebner.hpp"
#include "nll/presentation.hpp"

namespace nll {

// A line ell = l1 x1 + l2 x2 + l3 x3 in P^2, with a 3x2 parametrization of
// its points.
class LinePoint {
 public:
  // Throws DegenerateLine on the zero vector.
  LinePoint(PrimeField field, const std::array<Fp, 3>& coords);

  const std::array<Fp, 3>& coords() const { return coords_; }
  const Matrix& parametrization() const { return param_; }

 private:
  std::array<Fp, 3> coords_;
  Matrix param_;
};

// phi restricted to a line: binary forms of degree a_i - b_j.
class RestrictedBundle {
 public:
  RestrictedBundle(DegreeData degrees, std::vector<std::vector<BinaryForm>> entries);

  const DegreeData& degrees() const { return degrees_; }
  const BinaryForm& entry(int j, int i) const {
    return entries_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }

  // Map of global sections in degree t, from sum H^0(O(t - a_i)) to
  // sum H^0(O(t - b_j)).
  Matrix global_sections(int t) const;
  // h^0(E(t)|ell), by left exactness.
  std::size_t h0(int t) const;

 private:
  DegreeData degrees_;
  std::vector<std::vector<BinaryForm>> entries_;
};

RestrictedBundle restrict(const PresentationMatrix& p, const LinePoint& line);

// Splitting type of E|ell (not normalized). Scans t over [-d-2, d+2] and
// checks h^0 against the found type over the whole window; throws
// InconsistentData when the window is exhausted or the restriction is not
// exact.
SplittingType splitting_type(const RestrictedBundle& rb);

// Majority over `lines` seeded random lines.
SplittingType generic_splitting_type(const PresentationMatrix& p, std::uint64_t seed,
                                     int lines = 5);

bool is_jumping(const PresentationMatrix& p, const LinePoint& line, const SplittingType& generic);
// Determines the generic type with a fixed seed first.
bool is_jumping(const PresentationMatrix& p, const LinePoint& line);

std::array<Fp, 3> random_line(const PrimeField& field, std::mt19937_64& rng);

// Base-field points on V(gb) in the dual plane. Zero-dimensional ideals
// yield all rational points; curves are cut with seeded random pencils and
// only rational roots are kept.
struct LocusSample {
  std::vector<std::array<Fp, 3>> points;
  // Pencils whose intersection with the curve had no rational point.
  std::size_t pencils_without_rational_roots = 0;
};
LocusSample sample_locus_points(const GroebnerBasis& gb, const IdealMeasure& measured,
                                std::size_t wanted, std::uint64_t seed);

}  // namespace nll
