#include "nll/matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <utility>

#include "nll/errors.hpp"

namespace nll {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp{1};
  return m;
}

Matrix Matrix::random(PrimeField field, std::size_t rows, std::size_t cols,
                      std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  for (auto& x : m.data_) x = field.random(rng);
  return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fp x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Fp> v) const {
  assert(v.size() == cols_);
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Fp acc{0};
    for (std::size_t c = 0; c < cols_; ++c)
      acc = field_.mul_add(acc, (*this)(r, c), v[c]);
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
  const PrimeField& F = a.field_;
  Matrix out(F, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fp aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) = F.mul_add(out(i, j), aik, b(k, j));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidInput("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix stack_rows(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw InvalidInput("stack_rows needs at least one block");
  std::size_t rows = 0;
  const std::size_t cols = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InvalidInput("stack_rows column mismatch");
    rows += b.rows();
  }
  Matrix out(blocks.front().field(), rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

namespace {

// In-place reduced row echelon form with pivots taken left to right.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  const PrimeField& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Fp inv = F.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = F.mul(m(r, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Fp f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m(i, k) = F.sub(m(i, k), F.mul(f, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& input) {
  Matrix m = input;
  const PrimeField& F = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> colperm(C);
  for (std::size_t c = 0; c < C; ++c) colperm[c] = c;
  std::size_t r = 0;
  for (; r < std::min(R, C); ++r) {
    // full pivoting: any nonzero entry of the trailing block
    std::size_t pr = R, pc = C;
    for (std::size_t i = r; i < R && pr == R; ++i)
      for (std::size_t j = r; j < C; ++j)
        if (!m(i, colperm[j]).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == R) break;
    if (pr != r)
      for (std::size_t k = 0; k < C; ++k) std::swap(m(pr, k), m(r, k));
    std::swap(colperm[pc], colperm[r]);
    const std::size_t col = colperm[r];
    const Fp inv = F.inv(m(r, col));
    for (std::size_t i = r + 1; i < R; ++i) {
      if (m(i, col).is_zero()) continue;
      const Fp f = F.mul(m(i, col), inv);
      for (std::size_t j = r; j < C; ++j) {
        const std::size_t cc = colperm[j];
        m(i, cc) = F.sub(m(i, cc), F.mul(f, m(r, cc)));
      }
    }
  }
  return r;
}

std::vector<Vector> kernel_basis(const Matrix& input) {
  Matrix m = input;
  const PrimeField& F = m.field();
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Fp{1};
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

CokernelBasis::CokernelBasis(const Matrix& m)
    : target_dim_(m.rows()), field_(m.field()) {
  Matrix image = m.transpose();
  pivots_ = rref_in_place(image);
  std::vector<bool> is_pivot(target_dim_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t c = 0; c < target_dim_; ++c)
    if (!is_pivot[c]) basis_.push_back(c);
  reduced_.reserve(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    auto row = image.row(r);
    reduced_.emplace_back(row.begin(), row.end());
  }
}

Vector CokernelBasis::reduce(std::span<const Fp> v) const {
  assert(v.size() == target_dim_);
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Fp f = w[pivots_[r]];
    if (f.is_zero()) continue;
    const Vector& row = reduced_[r];
    for (std::size_t k = pivots_[r]; k < target_dim_; ++k)
      if (!row[k].is_zero()) w[k] = field_.sub(w[k], field_.mul(f, row[k]));
  }
  Vector out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = w[basis_[i]];
  return out;
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  using boost::multiprecision::cpp_int;
  const std::size_t R = rows.size();
  const std::size_t C = R == 0 ? 0 : rows.front().size();
  std::vector<std::vector<cpp_int>> a(R, std::vector<cpp_int>(C));
  for (std::size_t i = 0; i < R; ++i) {
    if (rows[i].size() != C) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < C; ++j) a[i][j] = rows[i][j];
  }
  // Bareiss: every division below is exact.
  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<std::int64_t>> integer_lift(const Matrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).value;
  return out;
}

}  // namespace nll
