#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nll/field.hpp"
#include "nll/matrix.hpp"

namespace nll {

// R = k[x1,x2,x3] (primal) or S = k[l1,l2,l3], the coordinate ring of the
// dual plane. Only the variable names differ.
enum class Ring { Primal, Dual };

constexpr int kNumVars = 3;

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  constexpr int degree() const { return exp[0] + exp[1] + exp[2]; }

  static constexpr Monomial var(int v) {
    Monomial m;
    m.exp[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    for (std::size_t i = 0; i < kNumVars; ++i) a.exp[i] += b.exp[i];
    return a;
  }
  constexpr bool divides(Monomial other) const {
    return exp[0] <= other.exp[0] && exp[1] <= other.exp[1] && exp[2] <= other.exp[2];
  }

  // Degree-lexicographic with x1 > x2 > x3.
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exp <=> b.exp;
  }
  friend constexpr bool operator==(Monomial, Monomial) = default;
};

// dim [R]_t = C(t+2, 2), zero for t < 0.
constexpr std::size_t graded_dim(int t) {
  return t < 0 ? 0 : static_cast<std::size_t>(t + 2) * static_cast<std::size_t>(t + 1) / 2;
}

// Position of m in monomial_basis(m.degree()).
constexpr std::size_t deglex_index(Monomial m) {
  const std::size_t r = static_cast<std::size_t>(m.degree() - m.exp[0]);
  return r * (r + 1) / 2 + (r - m.exp[1]);
}

struct GradedPieceBasis {
  int degree = 0;
  std::vector<Monomial> monomials;  // descending deg-lex

  std::size_t size() const { return monomials.size(); }
};

GradedPieceBasis monomial_basis(int t);

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Fp coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(PrimeField field, Ring ring = Ring::Primal)
      : field_(field), ring_(ring) {}

  static Polynomial constant(PrimeField field, Ring ring, Fp c);
  static Polynomial term(PrimeField field, Ring ring, Monomial m, Fp c);
  static Polynomial variable(PrimeField field, Ring ring, int v);
  // c[0] v1 + c[1] v2 + c[2] v3
  static Polynomial linear(PrimeField field, Ring ring, const std::array<Fp, 3>& c);
  // Terms in any order; duplicates are summed, zeros dropped.
  static Polynomial from_terms(PrimeField field, Ring ring, std::vector<Term> terms);

  const PrimeField& field() const { return field_; }
  Ring ring() const { return ring_; }
  // Descending deg-lex, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }
  bool is_homogeneous() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  Monomial leading_monomial() const { return terms_.front().mono; }
  Fp leading_coefficient() const { return terms_.front().coeff; }
  Fp coefficient(Monomial m) const;

  Fp evaluate(const std::array<Fp, 3>& point) const;

  Polynomial scaled(Fp c) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  PrimeField field_;
  Ring ring_;
  std::vector<Term> terms_;
};

inline Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

// Matrix of x f : [R]_t -> [R]_{t+e} in monomial bases, f homogeneous of
// degree e (the zero polynomial is accepted with an explicit degree).
Matrix multiplication_matrix(const Polynomial& f, int t);
Matrix multiplication_matrix(const Polynomial& f, int degree_of_f, int t);

// f(A y) for a 3x3 matrix A: x_i -> sum_j A(i,j) y_j.
Polynomial linear_substitution(const Polynomial& f, const Matrix& a);

// Text format: `3*x1^2*x2 - x3^3`, variables l1,l2,l3 in the dual ring.
// Coefficients are printed as symmetric residues.
std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text, PrimeField field, Ring ring);

}  // namespace nll
