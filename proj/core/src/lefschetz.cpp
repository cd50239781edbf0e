#include "nll/lefschetz.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <unordered_map>

#include "nll/errors.hpp"

namespace nll {

DualLinearMatrix::DualLinearMatrix(PrimeField field, int degree, std::size_t rows, std::size_t cols)
    : field_(field), degree_(degree), rows_(rows), cols_(cols), data_(rows * cols) {}

Polynomial DualLinearMatrix::entry(std::size_t r, std::size_t c) const {
  return Polynomial::linear(field_, Ring::Dual, coeffs(r, c));
}

Matrix DualLinearMatrix::specialize(const std::array<Fp, 3>& ell) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      Fp v{};
      for (std::size_t k = 0; k < 3; ++k) v = field_.mul_add(v, coeffs(r, c)[k], ell[k]);
      out(r, c) = v;
    }
  return out;
}

DualLinearMatrix dual_matrix(const GradedModule& m, int i) {
  DualLinearMatrix b(m.field(), i, m.h(i + 1), m.h(i));
  if (b.empty()) return b;
  for (int v = 0; v < 3; ++v) {
    std::array<Fp, 3> x{};
    x[static_cast<std::size_t>(v)] = Fp{1};
    const Matrix xv = m.multiplication_map(x, i);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b.coeffs(r, c)[static_cast<std::size_t>(v)] = xv(r, c);
  }
  return b;
}

namespace {

using Dense = std::vector<Fp>;  // homogeneous form indexed by deglex_index

std::vector<std::size_t> bits_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

struct Minor {
  std::vector<std::size_t> rows, cols;
  Polynomial value;
};

// Minors of `a` (rows >= size) with the given columns, over every row subset.
// coeff(r, c) yields the linear form at (r, c) of `a`.
template <class Coeff>
void expand_columns(const PrimeField& F, std::size_t nrows, const std::vector<std::size_t>& cols,
                    const Coeff& coeff, std::vector<std::pair<std::vector<std::size_t>, Polynomial>>& out) {
  // index tables: position of m * x_v in degree k + 1
  const std::size_t s = cols.size();
  std::vector<std::vector<std::array<std::size_t, 3>>> up(s);
  for (std::size_t k = 0; k < s; ++k)
    for (const Monomial& mono : monomial_basis(static_cast<int>(k)).monomials) {
      std::array<std::size_t, 3> idx{};
      for (int v = 0; v < 3; ++v) idx[static_cast<std::size_t>(v)] = deglex_index(mono * Monomial::var(v));
      up[k].push_back(idx);
    }

  std::unordered_map<std::uint64_t, Dense> level{{0, Dense{Fp{1}}}};
  for (std::size_t k = 0; k < s; ++k) {
    std::unordered_map<std::uint64_t, Dense> next;
    for (const auto& [mask, poly] : level) {
      for (std::size_t r = 0; r < nrows; ++r) {
        if (mask & (1ull << r)) continue;
        const std::array<Fp, 3>& lin = coeff(r, cols[k]);
        if (lin[0].is_zero() && lin[1].is_zero() && lin[2].is_zero()) continue;
        const std::uint64_t nm = mask | (1ull << r);
        const bool negative = (std::popcount(nm & ((1ull << r) - 1)) + k) % 2 == 1;
        Dense& acc = next[nm];
        if (acc.empty()) acc.assign(graded_dim(static_cast<int>(k + 1)), Fp{});
        for (std::size_t i = 0; i < poly.size(); ++i) {
          if (poly[i].is_zero()) continue;
          for (std::size_t v = 0; v < 3; ++v) {
            Fp t = F.mul(poly[i], lin[v]);
            if (negative) t = F.neg(t);
            acc[up[k][i][v]] = F.add(acc[up[k][i][v]], t);
          }
        }
      }
    }
    level = std::move(next);
  }
  const auto& basis = monomial_basis(static_cast<int>(s)).monomials;
  for (const auto& [mask, poly] : level) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < poly.size(); ++i)
      if (!poly[i].is_zero()) terms.push_back({basis[i], poly[i]});
    out.emplace_back(bits_of(mask), Polynomial::from_terms(F, Ring::Dual, std::move(terms)));
  }
}

}  // namespace

std::vector<Polynomial> minors(const DualLinearMatrix& b, std::size_t size) {
  const PrimeField& F = b.field();
  if (size == 0) return {Polynomial::constant(F, Ring::Dual, Fp{1})};
  if (size > std::min(b.rows(), b.cols())) return {};
  // Expand along the smaller side so the subset DP runs over the larger one.
  const bool transposed = b.rows() < b.cols();
  const std::size_t big = transposed ? b.cols() : b.rows();
  const std::size_t small = transposed ? b.rows() : b.cols();
  if (big > 64) throw InvalidInput("minor expansion supports at most 64 rows");

  std::vector<Minor> all;
  for (const auto& chosen : subsets(small, size)) {
    std::vector<std::pair<std::vector<std::size_t>, Polynomial>> found;
    if (transposed)
      expand_columns(F, big, chosen, [&](std::size_t r, std::size_t c) -> const std::array<Fp, 3>& {
        return b.coeffs(c, r);
      }, found);
    else
      expand_columns(F, big, chosen, [&](std::size_t r, std::size_t c) -> const std::array<Fp, 3>& {
        return b.coeffs(r, c);
      }, found);
    std::map<std::vector<std::size_t>, Polynomial> by_subset;
    for (auto& [set, value] : found) by_subset.emplace(set, std::move(value));
    for (const auto& other : subsets(big, size)) {
      auto it = by_subset.find(other);
      Polynomial value = it == by_subset.end() ? Polynomial(F, Ring::Dual) : it->second;
      if (transposed)
        all.push_back({chosen, other, std::move(value)});
      else
        all.push_back({other, chosen, std::move(value)});
    }
  }
  std::sort(all.begin(), all.end(), [](const Minor& x, const Minor& y) {
    return std::tie(x.rows, x.cols) < std::tie(y.rows, y.cols);
  });
  std::vector<Polynomial> out;
  for (auto& m : all) out.push_back(std::move(m.value));
  return out;
}

LocusIdeal locus_ideal_at(const GradedModule& m, int i) {
  LocusIdeal ideal;
  ideal.degree = i;
  ideal.minor_size = std::min(m.h(i), m.h(i + 1));
  if (ideal.minor_size == 0) {
    ideal.generators = {Polynomial::constant(m.field(), Ring::Dual, Fp{1})};
    return ideal;
  }
  ideal.generators = minors(dual_matrix(m, i), ideal.minor_size);
  return ideal;
}

Locus locus_ideal(const GradedModule& m) {
  Locus locus;
  locus.middle_degree = m.degrees().middle_degree();
  const PrimeField F = m.field();

  struct Piece {
    LocusIdeal ideal;
    GroebnerBasis basis;
  };
  std::vector<int> degrees;
  for (int i = m.min_degree() - 1; i <= m.max_degree(); ++i)
    if (m.h(i) > 0 && m.h(i + 1) > 0) degrees.push_back(i);
  if (std::find(degrees.begin(), degrees.end(), locus.middle_degree) == degrees.end())
    degrees.push_back(locus.middle_degree);

  std::vector<std::future<Piece>> jobs;
  for (int i : degrees)
    jobs.push_back(std::async(std::launch::async, [&m, i, F] {
      Piece p{locus_ideal_at(m, i), {}};
      p.basis = buchberger(p.ideal.generators, F, Ring::Dual);
      return p;
    }));

  const Polynomial one = Polynomial::constant(F, Ring::Dual, Fp{1});
  locus.intersection = buchberger(std::span(&one, 1));
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    Piece p = jobs[k].get();
    const int i = degrees[k];
    if (i == locus.middle_degree) {
      locus.middle = p.ideal;
      locus.middle_basis = p.basis;
    }
    if (p.ideal.minor_size == 0) continue;
    locus.contributing_degrees.push_back(i);
    locus.intersection = intersect(locus.intersection, p.basis);
  }
  std::sort(locus.contributing_degrees.begin(), locus.contributing_degrees.end());
  return locus;
}

LefschetzCheck is_lefschetz(const GradedModule& m, const std::array<Fp, 3>& ell) {
  if (std::all_of(ell.begin(), ell.end(), [](Fp v) { return v.is_zero(); }))
    throw InvalidInput("the zero form is not a line");
  LefschetzCheck check;
  for (int i = m.min_degree(); i < m.max_degree(); ++i) {
    const std::size_t expected = std::min(m.h(i), m.h(i + 1));
    if (expected == 0) continue;
    if (rank(m.multiplication_map(ell, i)) != expected) {
      check.lefschetz = false;
      check.failing_degrees.push_back(i);
    }
  }
  return check;
}

}  // namespace nll
