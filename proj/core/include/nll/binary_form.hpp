#pragma once

#include <array>
#include <span>
#include <vector>

#include "nll/field.hpp"
#include "nll/matrix.hpp"
#include "nll/polynomial.hpp"

namespace nll {

// Homogeneous form of fixed degree in (s, u); coefficient k multiplies
// s^(degree-k) u^k. The zero form keeps its degree tag.
class BinaryForm {
 public:
  BinaryForm(PrimeField field, int degree);
  BinaryForm(PrimeField field, std::vector<Fp> coeffs);

  const PrimeField& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Fp>& coeffs() const { return coeffs_; }
  Fp coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  bool is_zero() const;

  Fp evaluate(Fp s, Fp u) const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  PrimeField field_;
  int degree_;
  std::vector<Fp> coeffs_;
};

// Image of a homogeneous f under x_i -> param(i,0) s + param(i,1) u.
// Throws DegenerateLine when rank(param) < 2.
BinaryForm substitute_line(const Polynomial& f, const Matrix& param);
// Variant for entries whose degree is known even when f == 0.
BinaryForm substitute_line(const Polynomial& f, int degree, const Matrix& param);

// Dense univariate polynomial, coefficients from low to high degree, no
// trailing zeros.
class UPoly {
 public:
  explicit UPoly(PrimeField field, std::vector<Fp> coeffs = {});

  const PrimeField& field() const { return field_; }
  const std::vector<Fp>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fp leading() const { return c_.back(); }
  Fp evaluate(Fp x) const;
  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  PrimeField field_;
  std::vector<Fp> c_;
};

// (quotient, remainder); throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& modulus);

// Distinct roots in the base field, ascending.
std::vector<Fp> roots(const UPoly& f);
// Number of distinct roots over the algebraic closure.
int distinct_root_count(const UPoly& f);

// Common zeros in P^1 over the base field, normalized to (s, 1) or (1, 0).
// whole_line is set when every form vanishes identically.
struct BinaryRoots {
  bool whole_line = false;
  std::vector<std::array<Fp, 2>> points;
};
BinaryRoots common_roots(std::span<const BinaryForm> forms);

}  // namespace nll
