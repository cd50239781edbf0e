#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nll/field.hpp"

namespace nll {

using Vector = std::vector<Fp>;

// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix random(PrimeField field, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng);
  // Rows are reduced into the field; all rows must have equal length.
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Fp> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(std::span<const Fp> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> data_;
};

// Vertical concatenation; all blocks must share the column count.
Matrix stack_rows(std::span<const Matrix> blocks);

std::size_t rank(const Matrix& m);

// cols - rank(m) independent vectors v with m v = 0, in reduced form: each
// vector has a 1 at its free column and 0 at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

// Basis of target / image(m) by target coordinates. The image is put in
// reduced echelon form with pivots at the earliest possible coordinates; the
// remaining coordinates, ascending, form the coset basis.
class CokernelBasis {
 public:
  CokernelBasis() = default;
  explicit CokernelBasis(const Matrix& m);

  std::size_t target_dim() const { return target_dim_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  // Coordinates of the class of v in the coset basis.
  Vector reduce(std::span<const Fp> v) const;

 private:
  std::size_t target_dim_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> basis_;
  std::vector<Vector> reduced_;  // one echelon row per pivot
  PrimeField field_;
};

inline CokernelBasis cokernel_basis(const Matrix& m) { return CokernelBasis(m); }

// Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination
// in arbitrary precision. Audit path for the modular rank.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

// Integer lift of m with entries in [0, p).
std::vector<std::vector<std::int64_t>> integer_lift(const Matrix& m);

}  // namespace nll
