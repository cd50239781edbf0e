#include "nll/jumping.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "nll/errors.hpp"

namespace nll {
namespace {

constexpr std::uint64_t kGenericLineSeed = 1;

std::size_t sections(int m) { return m < 0 ? 0 : static_cast<std::size_t>(m + 1); }

std::array<Fp, 3> normalized(const PrimeField& F, std::array<Fp, 3> p) {
  const auto lead = std::find_if(p.begin(), p.end(), [](Fp v) { return !v.is_zero(); });
  if (lead == p.end()) throw DegenerateLine("zero point");
  const Fp inv = F.inv(*lead);
  for (auto& v : p) v = F.mul(v, inv);
  return p;
}

}  // namespace

LinePoint::LinePoint(PrimeField field, const std::array<Fp, 3>& coords)
    : coords_(coords), param_(field, 3, 2) {
  if (std::all_of(coords.begin(), coords.end(), [](Fp v) { return v.is_zero(); }))
    throw DegenerateLine("the zero vector is not a line");
  Matrix row(field, 1, 3);
  for (std::size_t v = 0; v < 3; ++v) row(0, v) = coords[v];
  const auto ker = kernel_basis(row);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t r = 0; r < 3; ++r) param_(r, c) = ker[c][r];
}

RestrictedBundle::RestrictedBundle(DegreeData degrees, std::vector<std::vector<BinaryForm>> entries)
    : degrees_(std::move(degrees)), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(degrees_.n()))
    throw InvalidInput("restricted bundle has the wrong number of rows");
  for (int j = 0; j < degrees_.n(); ++j)
    for (int i = 0; i < degrees_.n() + 2; ++i)
      if (entry(j, i).degree() != std::max(degrees_.a[static_cast<std::size_t>(i)] -
                                               degrees_.b[static_cast<std::size_t>(j)], 0))
        throw InvalidInput("restricted entry has the wrong degree");
}

Matrix RestrictedBundle::global_sections(int t) const {
  const auto& dd = degrees_;
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (int bj : dd.b) row_off.push_back(row_off.back() + sections(t - bj));
  for (int ai : dd.a) col_off.push_back(col_off.back() + sections(t - ai));
  const PrimeField& F = entries_.front().front().field();
  Matrix m(F, row_off.back(), col_off.back());
  for (std::size_t j = 0; j < dd.b.size(); ++j)
    for (std::size_t i = 0; i < dd.a.size(); ++i) {
      const std::size_t src = sections(t - dd.a[i]);
      if (src == 0 || dd.a[i] < dd.b[j]) continue;
      const BinaryForm& f = entries_[j][i];
      for (std::size_t p = 0; p < src; ++p)
        for (int k = 0; k <= f.degree(); ++k) {
          const Fp c = f.coeff(k);
          if (!c.is_zero()) m(row_off[j] + p + static_cast<std::size_t>(k), col_off[i] + p) = c;
        }
    }
  return m;
}

std::size_t RestrictedBundle::h0(int t) const {
  const Matrix m = global_sections(t);
  return m.cols() - rank(m);
}

RestrictedBundle restrict(const PresentationMatrix& p, const LinePoint& line) {
  std::vector<std::vector<BinaryForm>> rows;
  for (int j = 0; j < p.rows(); ++j) {
    std::vector<BinaryForm> row;
    for (int i = 0; i < p.cols(); ++i) {
      const int deg = p.entry_degree(j, i);
      if (deg < 0)
        row.emplace_back(p.field(), 0);
      else
        row.push_back(substitute_line(p.entry(j, i), deg, line.parametrization()));
    }
    rows.push_back(std::move(row));
  }
  return RestrictedBundle(p.degrees(), std::move(rows));
}

SplittingType splitting_type(const RestrictedBundle& rb) {
  const int d = rb.degrees().d();
  const int lo = -std::abs(d) - 2, hi = std::abs(d) + 2;
  std::optional<int> first;
  for (int t = lo; t <= hi && !first; ++t)
    if (rb.h0(t) > 0) first = t;
  if (!first)
    throw InconsistentData("no section of E|ell in the window [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  const SplittingType s{-*first, -d + *first};
  for (int t = *first; t <= hi; ++t) {
    const std::size_t expected = sections(t + s.alpha) + sections(t + s.beta);
    if (rb.h0(t) != expected)
      throw InconsistentData("restriction to the line is not exact (h0 mismatch at t = " +
                             std::to_string(t) + ")");
  }
  const Matrix top = rb.global_sections(hi);
  if (rank(top) != top.rows()) throw InconsistentData("restricted map is not surjective");
  return s;
}

std::array<Fp, 3> random_line(const PrimeField& field, std::mt19937_64& rng) {
  std::array<Fp, 3> c{};
  do {
    for (auto& v : c) v = field.random(rng);
  } while (c[0].is_zero() && c[1].is_zero() && c[2].is_zero());
  return c;
}

SplittingType generic_splitting_type(const PresentationMatrix& p, std::uint64_t seed, int lines) {
  std::mt19937_64 rng(seed);
  std::map<std::pair<int, int>, int> votes;
  std::vector<std::pair<int, int>> order;
  for (int k = 0; k < lines; ++k) {
    const SplittingType s = splitting_type(restrict(p, LinePoint(p.field(), random_line(p.field(), rng))));
    if (votes[{s.alpha, s.beta}]++ == 0) order.emplace_back(s.alpha, s.beta);
  }
  // ties go to the type seen first
  std::pair<int, int> best = order.front();
  for (const auto& o : order)
    if (votes[o] > votes[best]) best = o;
  return {best.first, best.second};
}

bool is_jumping(const PresentationMatrix& p, const LinePoint& line, const SplittingType& generic) {
  return splitting_type(restrict(p, line)) != generic;
}

bool is_jumping(const PresentationMatrix& p, const LinePoint& line) {
  return is_jumping(p, line, generic_splitting_type(p, kGenericLineSeed));
}

LocusSample sample_locus_points(const GroebnerBasis& gb, const IdealMeasure& measured,
                                std::size_t wanted, std::uint64_t seed) {
  LocusSample out;
  const PrimeField& F = gb.field;
  if (measured.dimension < 0) return out;
  if (measured.dimension == 0) {
    out.points = solve_zero_dimensional(gb, seed).rational_points;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::array<Fp, 3>> found;
  const std::size_t max_pencils = 20 * std::max<std::size_t>(wanted, 1);
  for (std::size_t attempt = 0; attempt < max_pencils && found.size() < wanted; ++attempt) {
    Matrix param(F, 3, 2);
    do {
      param = Matrix::random(F, 3, 2, rng);
    } while (rank(param) < 2);
    std::vector<BinaryForm> restricted;
    for (const auto& f : gb.basis) restricted.push_back(substitute_line(f, param));
    BinaryRoots roots = common_roots(restricted);
    if (roots.whole_line) {
      for (int k = 0; k < 2; ++k) roots.points.push_back({F.random(rng), F.random(rng)});
      roots.points.push_back({Fp{1}, Fp{0}});
    }
    if (roots.points.empty()) ++out.pencils_without_rational_roots;
    for (const auto& su : roots.points) {
      if (su[0].is_zero() && su[1].is_zero()) continue;
      const Vector v = param.apply(std::vector<Fp>{su[0], su[1]});
      const auto p = normalized(F, {v[0], v[1], v[2]});
      for (const auto& f : gb.basis)
        if (!f.evaluate(p).is_zero()) throw InconsistentData("sampled point is not on the locus");
      found.insert(p);
      if (found.size() >= wanted) break;
    }
  }
  out.points.assign(found.begin(), found.end());
  return out;
}

}  // namespace nll
