#include "nll/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "nll/errors.hpp"

namespace nll {

DegreeData DegreeData::make(std::vector<int> a, std::vector<int> b) {
  if (b.empty()) throw InvalidInput("degree data needs n >= 1 target degrees b");
  if (a.size() != b.size() + 2)
    throw InvalidInput("expected " + std::to_string(b.size() + 2) + " source degrees a for n = " +
                       std::to_string(b.size()) + ", got " + std::to_string(a.size()));
  if (!std::is_sorted(a.begin(), a.end())) throw InvalidInput("a must be non-decreasing");
  if (!std::is_sorted(b.begin(), b.end())) throw InvalidInput("b must be non-decreasing");
  return DegreeData{std::move(a), std::move(b)};
}

int DegreeData::d() const {
  return std::accumulate(a.begin(), a.end(), 0) - std::accumulate(b.begin(), b.end(), 0);
}

int DegreeData::middle_degree() const {
  const int x = d() - 4;
  return x >= 0 ? x / 2 : -((-x + 1) / 2);
}

bool DegreeData::b_all_zero() const {
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

std::map<int, std::size_t> resolution_hilbert_function(const DegreeData& dd) {
  // 0 -> sum R(-d+b) -> sum R(-d+a) -> sum R(-a) -> sum R(-b) -> M -> 0
  const int d = dd.d();
  std::map<int, std::size_t> h;
  for (int t = dd.b.front(); t <= dd.socle_degree(); ++t) {
    long long v = 0;
    for (int bj : dd.b) v += static_cast<long long>(graded_dim(t - bj)) -
                             static_cast<long long>(graded_dim(t - d + bj));
    for (int ai : dd.a) v += static_cast<long long>(graded_dim(t - d + ai)) -
                             static_cast<long long>(graded_dim(t - ai));
    if (v < 0) throw InconsistentData("negative Hilbert function value from degree data");
    h[t] = static_cast<std::size_t>(v);
  }
  return h;
}

PresentationMatrix::PresentationMatrix(DegreeData degrees, PrimeField field,
                                       std::vector<std::vector<Polynomial>> entries,
                                       std::optional<std::uint64_t> seed)
    : degrees_(std::move(degrees)), field_(field), entries_(std::move(entries)), seed_(seed) {
  if (entries_.size() != static_cast<std::size_t>(rows()))
    throw InvalidInput("presentation matrix needs " + std::to_string(rows()) + " rows");
  for (int j = 0; j < rows(); ++j) {
    if (entries_[static_cast<std::size_t>(j)].size() != static_cast<std::size_t>(cols()))
      throw InvalidInput("presentation matrix row " + std::to_string(j) + " needs " +
                         std::to_string(cols()) + " entries");
    for (int i = 0; i < cols(); ++i) {
      const Polynomial& f = entry(j, i);
      if (!(f.field() == field_) || f.ring() != Ring::Primal)
        throw InvalidInput("presentation entries must be primal polynomials over F_p");
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || f.degree() != entry_degree(j, i))
        throw InvalidInput("entry (" + std::to_string(j) + "," + std::to_string(i) +
                           ") must be homogeneous of degree " +
                           std::to_string(entry_degree(j, i)));
    }
  }
}

PresentationMatrix random_presentation(const DegreeData& degrees, std::uint64_t seed,
                                       PrimeField field) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Polynomial>> entries;
  for (int j = 0; j < degrees.n(); ++j) {
    std::vector<Polynomial> row;
    for (int i = 0; i < degrees.n() + 2; ++i) {
      const int deg = degrees.a[static_cast<std::size_t>(i)] - degrees.b[static_cast<std::size_t>(j)];
      std::vector<Polynomial::Term> terms;
      for (const auto& m : monomial_basis(deg).monomials) terms.push_back({m, field.random(rng)});
      row.push_back(Polynomial::from_terms(field, Ring::Primal, std::move(terms)));
    }
    entries.push_back(std::move(row));
  }
  return PresentationMatrix(degrees, field, std::move(entries), seed);
}

Matrix graded_piece_matrix(const PresentationMatrix& p, int t) {
  const auto& dd = p.degrees();
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (int bj : dd.b) row_off.push_back(row_off.back() + graded_dim(t - bj));
  for (int ai : dd.a) col_off.push_back(col_off.back() + graded_dim(t - ai));
  Matrix m(p.field(), row_off.back(), col_off.back());
  for (int j = 0; j < p.rows(); ++j)
    for (int i = 0; i < p.cols(); ++i) {
      const int src = t - dd.a[static_cast<std::size_t>(i)];
      const Polynomial& f = p.entry(j, i);
      if (src < 0 || f.is_zero()) continue;
      const Matrix block = multiplication_matrix(f, p.entry_degree(j, i), src);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
          m(row_off[static_cast<std::size_t>(j)] + r, col_off[static_cast<std::size_t>(i)] + c) =
              block(r, c);
    }
  return m;
}

GradedModule::GradedModule(PresentationMatrix presentation)
    : presentation_(std::move(presentation)) {
  const auto& dd = degrees();
  const int e = dd.socle_degree();
  for (int t = dd.b.front(); t <= std::max(e, dd.b.front() - 1) + 3; ++t) {
    Piece piece;
    piece.block_offset.push_back(0);
    for (int bj : dd.b) piece.block_offset.push_back(piece.block_offset.back() + graded_dim(t - bj));
    piece.coker = CokernelBasis(graded_piece_matrix(presentation_, t));
    if (t > e && piece.coker.dim() != 0)
      throw NotFiniteLength("coker(phi) is nonzero in degree " + std::to_string(t) +
                            " beyond the socle degree " + std::to_string(e));
    pieces_.emplace(t, std::move(piece));
  }
}

const GradedModule::Piece* GradedModule::piece(int t) const {
  auto it = pieces_.find(t);
  return it == pieces_.end() ? nullptr : &it->second;
}

std::size_t GradedModule::h(int t) const {
  if (t < min_degree() || t > max_degree()) return 0;
  return piece(t)->coker.dim();
}

std::size_t GradedModule::length() const {
  std::size_t total = 0;
  for (int t = min_degree(); t <= max_degree(); ++t) total += h(t);
  return total;
}

Matrix GradedModule::multiplication_map(const std::array<Fp, 3>& ell, int t) const {
  const std::size_t src_dim = h(t), dst_dim = h(t + 1);
  Matrix out(field(), dst_dim, src_dim);
  if (src_dim == 0 || dst_dim == 0) return out;
  const Piece& src = *piece(t);
  const Piece& dst = *piece(t + 1);
  const auto& dd = degrees();
  const PrimeField& F = field();

  for (std::size_t col = 0; col < src_dim; ++col) {
    const std::size_t coord = src.coker.basis()[col];
    std::size_t j = 0;
    while (src.block_offset[j + 1] <= coord) ++j;
    const int deg = t - dd.b[j];
    const Monomial mono = monomial_basis(deg).monomials[coord - src.block_offset[j]];
    Vector image(dst.coker.target_dim());
    for (int v = 0; v < 3; ++v) {
      const Fp c = ell[static_cast<std::size_t>(v)];
      if (c.is_zero()) continue;
      auto& slot = image[dst.block_offset[j] + deglex_index(mono * Monomial::var(v))];
      slot = F.add(slot, c);
    }
    const Vector reduced = dst.coker.reduce(image);
    for (std::size_t r = 0; r < dst_dim; ++r) out(r, col) = reduced[r];
  }
  return out;
}

std::map<int, std::size_t> hilbert_function(const GradedModule& m) {
  std::map<int, std::size_t> h;
  for (int t = m.min_degree(); t <= m.max_degree(); ++t) h[t] = m.h(t);
  return h;
}

std::vector<std::size_t> hilbert_vector(const GradedModule& m) {
  std::vector<std::size_t> h;
  for (int t = m.min_degree(); t <= m.max_degree(); ++t) h.push_back(m.h(t));
  return h;
}

Matrix multiplication_map(const GradedModule& m, const Polynomial& ell, int t) {
  if (ell.ring() != Ring::Primal || !ell.is_homogeneous() || (!ell.is_zero() && ell.degree() != 1))
    throw InvalidInput("multiplication_map needs a linear form in R");
  std::array<Fp, 3> c{};
  for (int v = 0; v < 3; ++v) c[static_cast<std::size_t>(v)] = ell.coefficient(Monomial::var(v));
  return m.multiplication_map(c, t);
}

std::vector<int> socle(const GradedModule& m) {
  std::vector<int> degrees;
  for (int t = m.min_degree(); t <= m.max_degree(); ++t) {
    if (m.h(t) == 0) continue;
    std::vector<Matrix> maps;
    for (int v = 0; v < 3; ++v) {
      std::array<Fp, 3> x{};
      x[static_cast<std::size_t>(v)] = Fp{1};
      maps.push_back(m.multiplication_map(x, t));
    }
    const std::size_t dim = m.h(t) - rank(stack_rows(maps));
    degrees.insert(degrees.end(), dim, t);
  }
  return degrees;
}

bool is_unimodal(const std::vector<std::size_t>& h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 >= h.size();
}

RationalAudit rational_rank_audit(const PresentationMatrix& p) {
  RationalAudit audit;
  const auto& dd = p.degrees();
  for (int t = dd.b.front(); t <= dd.socle_degree() + 1; ++t) {
    const Matrix m = graded_piece_matrix(p, t);
    audit.degrees_checked.push_back(t);
    if (rank(m) != rational_rank(integer_lift(m))) audit.mismatches.push_back(t);
  }
  return audit;
}

}  // namespace nll
