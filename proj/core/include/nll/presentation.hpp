#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nll/field.hpp"
#include "nll/matrix.hpp"
#include "nll/polynomial.hpp"

namespace nll {

// Twists of phi : sum R(-a_i) -> sum R(-b_j), with n+2 sources and n
// targets, both sorted ascending.
struct DegreeData {
  std::vector<int> a;
  std::vector<int> b;

  // Validates shape (n >= 1, |a| = n + 2) and ordering; throws InvalidInput.
  static DegreeData make(std::vector<int> a, std::vector<int> b);

  int n() const { return static_cast<int>(b.size()); }
  // sum a - sum b
  int d() const;
  // Top degree of coker(phi): d - 3 - b_1.
  int socle_degree() const { return d() - 3 - b.front(); }
  // floor((d - 4) / 2)
  int middle_degree() const;
  bool b_all_zero() const;

  friend bool operator==(const DegreeData&, const DegreeData&) = default;
};

// Hilbert function of coker(phi) forced by the degrees of the
// Buchsbaum-Rim resolution, on [b_1, e].
std::map<int, std::size_t> resolution_hilbert_function(const DegreeData& degrees);

class PresentationMatrix {
 public:
  // entries[j][i] is the map R(-a_i) -> R(-b_j): zero or homogeneous of
  // degree a_i - b_j. Throws InvalidInput otherwise.
  PresentationMatrix(DegreeData degrees, PrimeField field,
                     std::vector<std::vector<Polynomial>> entries,
                     std::optional<std::uint64_t> seed = std::nullopt);

  const DegreeData& degrees() const { return degrees_; }
  const PrimeField& field() const { return field_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  int rows() const { return degrees_.n(); }
  int cols() const { return degrees_.n() + 2; }
  const Polynomial& entry(int j, int i) const {
    return entries_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  int entry_degree(int j, int i) const {
    return degrees_.a[static_cast<std::size_t>(i)] - degrees_.b[static_cast<std::size_t>(j)];
  }

 private:
  DegreeData degrees_;
  PrimeField field_;
  std::vector<std::vector<Polynomial>> entries_;
  std::optional<std::uint64_t> seed_;
};

// Entries filled row by row, monomials in deg-lex order, coefficients drawn
// from mt19937_64(seed).
PresentationMatrix random_presentation(const DegreeData& degrees, std::uint64_t seed,
                                       PrimeField field = PrimeField());

// phi in degree t: sum [R]_{t-a_i} -> sum [R]_{t-b_j}, block (j, i) being
// multiplication by phi[j][i].
Matrix graded_piece_matrix(const PresentationMatrix& p, int t);

// M = coker(phi) with a chosen coset basis in every degree.
class GradedModule {
 public:
  // Throws NotFiniteLength if M_t != 0 for some e < t <= e + 3.
  explicit GradedModule(PresentationMatrix presentation);

  const PresentationMatrix& presentation() const { return presentation_; }
  const DegreeData& degrees() const { return presentation_.degrees(); }
  const PrimeField& field() const { return presentation_.field(); }
  int min_degree() const { return degrees().b.front(); }
  int max_degree() const { return degrees().socle_degree(); }

  std::size_t h(int t) const;
  // Length of M.
  std::size_t length() const;

  // The h_{t+1} x h_t matrix of x ell : M_t -> M_{t+1}.
  Matrix multiplication_map(const std::array<Fp, 3>& ell, int t) const;

 private:
  struct Piece {
    std::vector<std::size_t> block_offset;  // per target summand j
    CokernelBasis coker;
  };
  const Piece* piece(int t) const;

  PresentationMatrix presentation_;
  std::map<int, Piece> pieces_;
};

std::map<int, std::size_t> hilbert_function(const GradedModule& m);
// Values on [b_1, e].
std::vector<std::size_t> hilbert_vector(const GradedModule& m);

// ell must be a linear form in the primal ring.
Matrix multiplication_map(const GradedModule& m, const Polynomial& ell, int t);

// Degrees of a basis of {v in M : x_i v = 0 for all i}, ascending.
std::vector<int> socle(const GradedModule& m);

bool is_unimodal(const std::vector<std::size_t>& h);

// Compares the modular rank of every graded piece of phi with the rational
// rank of its integer lift.
struct RationalAudit {
  std::vector<int> degrees_checked;
  std::vector<int> mismatches;
  bool ok() const { return mismatches.empty(); }
};
RationalAudit rational_rank_audit(const PresentationMatrix& p);

}  // namespace nll
