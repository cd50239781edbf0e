#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nll/groebner.hpp"
#include "nll/matrix.hpp"
#include "nll/polynomial.hpp"
#include "nll/presentation.hpp"

namespace nll {

// B_i: the h_{i+1} x h_i matrix of linear forms in S representing
// ell -> (x ell : M_i -> M_{i+1}).
class DualLinearMatrix {
 public:
  DualLinearMatrix(PrimeField field, int degree, std::size_t rows, std::size_t cols);

  const PrimeField& field() const { return field_; }
  int degree() const { return degree_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  // Coefficients of l1, l2, l3 in entry (r, c).
  const std::array<Fp, 3>& coeffs(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::array<Fp, 3>& coeffs(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Polynomial entry(std::size_t r, std::size_t c) const;
  Matrix specialize(const std::array<Fp, 3>& ell) const;

 private:
  PrimeField field_;
  int degree_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::array<Fp, 3>> data_;
};

DualLinearMatrix dual_matrix(const GradedModule& m, int i);

struct LocusIdeal {
  int degree = 0;
  // Minor size min(h_i, h_{i+1}); 0 means the unit ideal.
  std::size_t minor_size = 0;
  // Every minor, zero ones included, ordered lexicographically by
  // (row subset, column subset). {1} when minor_size is 0.
  std::vector<Polynomial> generators;
};

// All minors of size `size` of a matrix of linear forms, by Laplace
// expansion over subsets.
std::vector<Polynomial> minors(const DualLinearMatrix& b, std::size_t size);

LocusIdeal locus_ideal_at(const GradedModule& m, int i);

struct Locus {
  int middle_degree = 0;
  LocusIdeal middle;
  GroebnerBasis middle_basis;
  // Degrees whose contribution is not the unit ideal.
  std::vector<int> contributing_degrees;
  // Intersection over every degree with h_i > 0 or h_{i+1} > 0.
  GroebnerBasis intersection;
};

// Degree-wise ideals are computed concurrently.
Locus locus_ideal(const GradedModule& m);

struct LefschetzCheck {
  bool lefschetz = true;
  std::vector<int> failing_degrees;
};

// Throws InvalidInput on the zero form.
LefschetzCheck is_lefschetz(const GradedModule& m, const std::array<Fp, 3>& ell);

}  // namespace nll
