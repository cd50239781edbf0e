#include "nll/binary_form.hpp"

#include <algorithm>
#include <random>

#include "nll/errors.hpp"

namespace nll {

BinaryForm::BinaryForm(PrimeField field, int degree)
    : field_(field), degree_(degree), coeffs_(degree < 0 ? 0 : static_cast<std::size_t>(degree + 1)) {}

BinaryForm::BinaryForm(PrimeField field, std::vector<Fp> coeffs)
    : field_(field), degree_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Fp c) { return c.is_zero(); });
}

Fp BinaryForm::evaluate(Fp s, Fp u) const {
  Fp acc{0};
  for (int k = 0; k <= degree_; ++k) {
    Fp term = field_.mul(coeff(k), field_.pow(s, static_cast<std::uint64_t>(degree_ - k)));
    acc = field_.add(acc, field_.mul(term, field_.pow(u, static_cast<std::uint64_t>(k))));
  }
  return acc;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  const PrimeField& F = a.field_;
  if (a.degree_ < 0 || b.degree_ < 0) return BinaryForm(F, a.degree_ + b.degree_);
  BinaryForm out(F, a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] =
          F.mul_add(out.coeffs_[static_cast<std::size_t>(i + j)], a.coeff(i), b.coeff(j));
  }
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) throw InvalidInput("adding binary forms of different degree");
  BinaryForm out = a;
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k)
    out.coeffs_[k] = a.field_.add(a.coeffs_[k], b.coeffs_[k]);
  return out;
}

BinaryForm substitute_line(const Polynomial& f, const Matrix& param) {
  if (!f.is_homogeneous()) throw InvalidInput("substitute_line needs a homogeneous form");
  return substitute_line(f, std::max(f.degree(), 0), param);
}

BinaryForm substitute_line(const Polynomial& f, int degree, const Matrix& param) {
  if (param.rows() != 3 || param.cols() != 2)
    throw InvalidInput("line parametrization must be 3x2");
  if (rank(param) < 2) throw DegenerateLine("line parametrization has rank < 2");
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != degree))
    throw InvalidInput("substitute_line: form is not homogeneous of the stated degree");
  const PrimeField& F = f.field();
  std::array<BinaryForm, 3> images{BinaryForm(F, {param(0, 0), param(0, 1)}),
                                   BinaryForm(F, {param(1, 0), param(1, 1)}),
                                   BinaryForm(F, {param(2, 0), param(2, 1)})};
  BinaryForm out(F, degree);
  for (const auto& t : f.terms()) {
    BinaryForm p(F, std::vector<Fp>{t.coeff});
    for (std::size_t i = 0; i < 3; ++i)
      for (int e = 0; e < t.mono.exp[i]; ++e) p = p * images[i];
    out = out + p;
  }
  return out;
}

UPoly::UPoly(PrimeField field, std::vector<Fp> coeffs) : field_(field), c_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fp UPoly::evaluate(Fp x) const {
  Fp acc{0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.mul_add(*it, acc, x);
  return acc;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  const Fp inv = field_.inv(c_.back());
  std::vector<Fp> out(c_);
  for (auto& x : out) x = field_.mul(x, inv);
  return UPoly(field_, std::move(out));
}

UPoly UPoly::derivative() const {
  std::vector<Fp> out;
  for (std::size_t k = 1; k < c_.size(); ++k)
    out.push_back(field_.mul(c_[k], field_.from_int(static_cast<std::int64_t>(k))));
  return UPoly(field_, std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Fp> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    Fp x = k < a.c_.size() ? a.c_[k] : Fp{0};
    Fp y = k < b.c_.size() ? b.c_[k] : Fp{0};
    out[k] = a.field_.add(x, y);
  }
  return UPoly(a.field_, std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Fp> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    Fp x = k < a.c_.size() ? a.c_[k] : Fp{0};
    Fp y = k < b.c_.size() ? b.c_[k] : Fp{0};
    out[k] = a.field_.sub(x, y);
  }
  return UPoly(a.field_, std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Fp> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = a.field_.mul_add(out[i + j], a.c_[i], b.c_[j]);
  return UPoly(a.field_, std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidInput("univariate division by zero");
  const PrimeField& F = a.field();
  std::vector<Fp> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(F), a};
  std::vector<Fp> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Fp inv = F.inv(b.leading());
  for (int k = a.degree(); k >= db; --k) {
    const Fp q = F.mul(rem[static_cast<std::size_t>(k)], inv);
    quo[static_cast<std::size_t>(k - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k - db + j)];
      r = F.sub(r, F.mul(q, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(F, std::move(quo)), UPoly(F, std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& modulus) {
  const PrimeField& F = base.field();
  UPoly result = divmod(UPoly(F, {Fp{1}}), modulus).second;
  UPoly b = divmod(base, modulus).second;
  while (e > 0) {
    if (e & 1) result = divmod(result * b, modulus).second;
    b = divmod(b * b, modulus).second;
    e >>= 1;
  }
  return result;
}

namespace {

// g monic, squarefree, product of distinct linear factors.
void split_linear(const UPoly& g, std::mt19937_64& rng, std::vector<Fp>& out) {
  const PrimeField& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(F.neg(g.coeffs()[0]));
    return;
  }
  for (;;) {
    const UPoly shift(F, {F.random(rng), Fp{1}});
    UPoly w = powmod(shift, (F.prime() - 1) / 2, g) - UPoly(F, {Fp{1}});
    UPoly d = gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).first.monic(), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fp> roots(const UPoly& f) {
  const PrimeField& F = f.field();
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<Fp> out;
  if (f.degree() == 0) return out;
  if (F.prime() < 1000) {
    for (std::uint32_t x = 0; x < F.prime(); ++x)
      if (f.evaluate(Fp{x}).is_zero()) out.push_back(Fp{x});
    return out;
  }
  const UPoly m = f.monic();
  const UPoly x(F, {Fp{0}, Fp{1}});
  const UPoly g = gcd(m, powmod(x, F.prime(), m) - x);
  std::mt19937_64 rng(0x6c6f637573ULL);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

int distinct_root_count(const UPoly& f) {
  if (f.is_zero()) throw InvalidInput("root count of the zero polynomial");
  const UPoly g = gcd(f, f.derivative());
  return f.degree() - g.degree();
}

BinaryRoots common_roots(std::span<const BinaryForm> forms) {
  BinaryRoots result;
  std::vector<const BinaryForm*> live;
  for (const auto& f : forms)
    if (!f.is_zero()) live.push_back(&f);
  if (live.empty()) {
    result.whole_line = true;
    return result;
  }
  const PrimeField& F = live.front()->field();
  // chart u = 1: f(s, 1) has coefficient c_{D-j} at s^j
  UPoly g(F);
  bool at_infinity = true;  // the point [1:0]
  for (const auto* f : live) {
    const int D = f->degree();
    std::vector<Fp> c(static_cast<std::size_t>(D + 1));
    for (int j = 0; j <= D; ++j) c[static_cast<std::size_t>(j)] = f->coeff(D - j);
    g = gcd(g, UPoly(F, std::move(c)));
    if (!f->coeff(0).is_zero()) at_infinity = false;
  }
  if (at_infinity) result.points.push_back({Fp{1}, Fp{0}});
  if (g.degree() > 0)
    for (Fp s : roots(g)) result.points.push_back({s, Fp{1}});
  return result;
}

}  // namespace nll
