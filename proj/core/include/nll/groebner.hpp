#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "nll/field.hpp"
#include "nll/polynomial.hpp"

namespace nll {

// Lex and deg-lex use x1 > x2 > x3 (l1 > l2 > l3 in the dual ring).
enum class MonomialOrder { DegLex, Lex };

struct GroebnerBasis {
  PrimeField field;
  Ring ring = Ring::Dual;
  MonomialOrder order = MonomialOrder::DegLex;
  std::vector<Polynomial> generators;
  // Reduced and monic, ascending by leading monomial.
  std::vector<Polynomial> basis;

  bool is_zero() const { return basis.empty(); }
  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

Monomial leading_monomial(const Polynomial& f, MonomialOrder order);

// All generators must share field and ring. Exponents are limited to 2047.
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         MonomialOrder order = MonomialOrder::DegLex);
// Empty generator list: the zero ideal in the given ring.
GroebnerBasis buchberger(std::span<const Polynomial> gens, PrimeField field, Ring ring,
                         MonomialOrder order = MonomialOrder::DegLex);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const Polynomial& f);
// Every basis element of `sub` lies in `gb`.
bool contains(const GroebnerBasis& gb, const GroebnerBasis& sub);
bool same_ideal(const GroebnerBasis& x, const GroebnerBasis& y);
// Checks that all S-polynomials of `basis` reduce to zero modulo it.
bool is_groebner_basis(std::span<const Polynomial> basis, MonomialOrder order);

struct IdealMeasure {
  // Projective dimension of V(I) in P^2; -1 when empty.
  int dimension = -1;
  std::int64_t degree = 0;
  // Value at 0 of the Hilbert polynomial of S/I.
  std::int64_t hilbert_constant = 0;
  // dim 1 only: constant term minus that of a plane curve of the same
  // degree. Positive values count isolated or embedded points, which is
  // meaningful once I is saturated.
  std::int64_t residual_points = 0;

  int codimension() const { return 2 - dimension; }
};

// Homogeneous ideals only.
IdealMeasure measure(const GroebnerBasis& gb);
// Affine Krull dimension from the leading monomials: size of the largest
// set of variables with no leading monomial supported on it.
int combinatorial_dimension(const GroebnerBasis& gb);

GroebnerBasis intersect(const GroebnerBasis& x, const GroebnerBasis& y);
// I : f for homogeneous f != 0.
GroebnerBasis colon(const GroebnerBasis& gb, const Polynomial& f);
// I : (v1, v2, v3)
GroebnerBasis colon_irrelevant(const GroebnerBasis& gb);
// I : (v1, v2, v3)^infinity, by iterated colon until the basis is stable.
GroebnerBasis saturate(const GroebnerBasis& gb);

// Points of a zero-dimensional homogeneous ideal, found by projecting from
// a random center (seeded), eliminating, and lifting base-field roots.
struct ZeroDimSolutions {
  // Distinct projected points over the algebraic closure.
  int distinct_points = 0;
  // Normalized so the first nonzero coordinate is 1; ascending.
  std::vector<std::array<Fp, 3>> rational_points;
};
ZeroDimSolutions solve_zero_dimensional(const GroebnerBasis& gb, std::uint64_t seed);

}  // namespace nll
